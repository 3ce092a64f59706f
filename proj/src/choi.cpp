// Copyright 2026 The hoq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hoq/choi.hpp"

namespace hoq {

ChoiVector::ChoiVector(Layout layout, CVector amplitudes)
    : layout_(std::move(layout)), v_(std::move(amplitudes)) {
  if (static_cast<std::size_t>(v_.size()) != layout_.total_dim())
    throw DimensionError("vector length does not match layout dimension");
}

ChoiVector ChoiVector::operator+(const ChoiVector& o) const {
  return {layout_, v_ + align_to(o, layout_).vec()};
}

ChoiVector kron(const ChoiVector& a, const ChoiVector& b) {
  Layout layout = a.layout().concat(b.layout());
  CVector out(a.vec().size() * b.vec().size());
  for (Eigen::Index i = 0; i < a.vec().size(); ++i)
    out.segment(i * b.vec().size(), b.vec().size()) = a.vec()(i) * b.vec();
  return {std::move(layout), std::move(out)};
}

ChoiVector permute_subsystems(const ChoiVector& v,
                              const std::vector<std::string>& new_order) {
  if (new_order.size() != v.layout().size())
    throw LayoutError("new order is not a permutation of the layout labels");
  const Layout target = v.layout().select(new_order);
  const auto map = index_map(v.layout(), target);
  CVector out(static_cast<Eigen::Index>(map.size()));
  for (std::size_t i = 0; i < map.size(); ++i) out(i) = v.vec()(map[i]);
  return {target, std::move(out)};
}

ChoiVector align_to(const ChoiVector& v, const Layout& like) {
  if (v.layout() == like) return v;
  if (v.layout().size() != like.size())
    throw LayoutError("layouts carry different label sets");
  return permute_subsystems(v, like.labels());
}

ChoiMatrix outer(const ChoiVector& v) {
  return {v.layout(), v.vec() * v.vec().adjoint()};
}

ChoiVector choi_vector_of(const Operator& op, const Layout& in,
                          const Layout& out) {
  const auto din = static_cast<Eigen::Index>(in.total_dim());
  const auto dout = static_cast<Eigen::Index>(out.total_dim());
  if (op.cols() != din || op.rows() != dout)
    throw DimensionError("operator shape does not match its layouts");
  CVector v(din * dout);
  for (Eigen::Index i = 0; i < din; ++i)
    for (Eigen::Index o = 0; o < dout; ++o) v(i * dout + o) = op(o, i);
  return {in.concat(out), std::move(v)};
}

ChoiVector choi_vector_of(const Operator& op, const std::string& in_label,
                          const std::string& out_label) {
  if (op.size() == 0) throw DimensionError("empty operator");
  return choi_vector_of(op, Layout{{in_label, std::size_t(op.cols())}},
                        Layout{{out_label, std::size_t(op.rows())}});
}

Operator operator_of(const ChoiVector& v, const Layout& in, const Layout& out) {
  const ChoiVector w = align_to(v, in.concat(out));
  const auto din = static_cast<Eigen::Index>(in.total_dim());
  const auto dout = static_cast<Eigen::Index>(out.total_dim());
  Operator op(dout, din);
  for (Eigen::Index i = 0; i < din; ++i)
    for (Eigen::Index o = 0; o < dout; ++o) op(o, i) = w.vec()(i * dout + o);
  return op;
}

Operator operator_of(const ChoiVector& v, const std::string& in_label,
                     const std::string& out_label) {
  return operator_of(v, v.layout().select({in_label}),
                     v.layout().select({out_label}));
}

ChoiMatrix choi_matrix_of_kraus(const std::vector<Operator>& kraus,
                                const Layout& in, const Layout& out) {
  if (kraus.empty()) throw DimensionError("empty Kraus list");
  const auto d = static_cast<Eigen::Index>(in.total_dim() * out.total_dim());
  Operator acc = Operator::Zero(d, d);
  for (const auto& k : kraus) {
    const CVector v = choi_vector_of(k, in, out).vec();
    acc.noalias() += v * v.adjoint();
  }
  return {in.concat(out), std::move(acc)};
}

ChoiMatrix choi_matrix_of_kraus(const std::vector<Operator>& kraus,
                                const std::string& in_label,
                                const std::string& out_label) {
  if (kraus.empty()) throw DimensionError("empty Kraus list");
  const auto& k0 = kraus.front();
  for (const auto& k : kraus)
    if (k.rows() != k0.rows() || k.cols() != k0.cols())
      throw DimensionError("Kraus operators differ in shape");
  return choi_matrix_of_kraus(kraus, Layout{{in_label, std::size_t(k0.cols())}},
                              Layout{{out_label, std::size_t(k0.rows())}});
}

ChoiVector max_entangled(const std::string& label_a, const std::string& label_b,
                         std::size_t dim) {
  Layout layout{{label_a, dim}, {label_b, dim}};
  CVector v = CVector::Zero(static_cast<Eigen::Index>(dim * dim));
  for (std::size_t i = 0; i < dim; ++i) v(i * dim + i) = 1.0;
  return {std::move(layout), std::move(v)};
}

namespace {

struct Contraction {
  Layout a, b, c;
  std::vector<std::size_t> map_a, map_bq, map_br, map_c;
};

Contraction plan(const Layout& q, const Layout& r) {
  std::vector<std::string> shared;
  for (const auto& s : q.subsystems()) {
    if (!r.contains(s.label)) continue;
    if (r.dim(s.label) != s.dim)
      throw DimensionError("shared label '" + s.label +
                           "' has mismatched dimensions");
    shared.push_back(s.label);
  }
  Contraction p{q.without(shared), q.select(shared), r.without(shared), {}, {},
                {}, {}};
  p.a.concat(p.c);  // label collision check on the result
  p.map_a = index_map(q, p.a);
  p.map_bq = index_map(q, p.b);
  p.map_br = index_map(r, p.b);
  p.map_c = index_map(r, p.c);
  return p;
}

}  // namespace

ChoiMatrix link_product(const ChoiMatrix& q, const ChoiMatrix& r) {
  const Contraction p = plan(q.layout(), r.layout());
  const auto da = static_cast<Eigen::Index>(p.map_a.size());
  const auto db = static_cast<Eigen::Index>(p.map_bq.size());
  const auto dc = static_cast<Eigen::Index>(p.map_c.size());
  // (Q*R)[(a c),(a' c')] = sum_{y,b} Q[(a y),(a' b)] R[(y c),(b c')]
  Operator qm(da * da, db * db);
  for (Eigen::Index b = 0; b < db; ++b)
    for (Eigen::Index y = 0; y < db; ++y)
      for (Eigen::Index a2 = 0; a2 < da; ++a2)
        for (Eigen::Index a = 0; a < da; ++a)
          qm(a * da + a2, y * db + b) =
              q.mat()(p.map_a[a] + p.map_bq[y], p.map_a[a2] + p.map_bq[b]);
  Operator rm(db * db, dc * dc);
  for (Eigen::Index c2 = 0; c2 < dc; ++c2)
    for (Eigen::Index c = 0; c < dc; ++c)
      for (Eigen::Index b = 0; b < db; ++b)
        for (Eigen::Index y = 0; y < db; ++y)
          rm(y * db + b, c * dc + c2) =
              r.mat()(p.map_br[y] + p.map_c[c], p.map_br[b] + p.map_c[c2]);
  const Operator prod = qm * rm;
  Operator out(da * dc, da * dc);
  for (Eigen::Index c2 = 0; c2 < dc; ++c2)
    for (Eigen::Index a2 = 0; a2 < da; ++a2)
      for (Eigen::Index c = 0; c < dc; ++c)
        for (Eigen::Index a = 0; a < da; ++a)
          out(a * dc + c, a2 * dc + c2) = prod(a * da + a2, c * dc + c2);
  return {p.a.concat(p.c), std::move(out)};
}

ChoiVector link_product_vectors(const ChoiVector& q, const ChoiVector& r) {
  const Contraction p = plan(q.layout(), r.layout());
  const auto da = static_cast<Eigen::Index>(p.map_a.size());
  const auto db = static_cast<Eigen::Index>(p.map_bq.size());
  const auto dc = static_cast<Eigen::Index>(p.map_c.size());
  Operator qm(da, db);
  for (Eigen::Index y = 0; y < db; ++y)
    for (Eigen::Index a = 0; a < da; ++a)
      qm(a, y) = q.vec()(p.map_a[a] + p.map_bq[y]);
  Operator rm(db, dc);
  for (Eigen::Index c = 0; c < dc; ++c)
    for (Eigen::Index y = 0; y < db; ++y)
      rm(y, c) = r.vec()(p.map_br[y] + p.map_c[c]);
  const Operator prod = qm * rm;
  CVector out(da * dc);
  for (Eigen::Index a = 0; a < da; ++a)
    for (Eigen::Index c = 0; c < dc; ++c) out(a * dc + c) = prod(a, c);
  return {p.a.concat(p.c), std::move(out)};
}

}  // namespace hoq
