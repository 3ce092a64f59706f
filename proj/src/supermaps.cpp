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

#include "hoq/supermaps.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace hoq {

Layout process_layout(const Layout& source, const std::vector<std::string>& past,
                      const std::vector<std::string>& future,
                      const std::vector<Slot>& slots) {
  std::vector<std::string> order = past;
  for (const auto& s : slots) {
    order.push_back(s.in);
    order.push_back(s.out);
  }
  order.insert(order.end(), future.begin(), future.end());
  if (order.size() != source.size())
    throw LayoutError("process labels do not cover the layout exactly");
  return source.select(order);
}

ProcessMatrix::ProcessMatrix(ChoiMatrix choi, std::vector<std::string> past,
                             std::vector<std::string> future,
                             std::vector<Slot> slots)
    : past_(std::move(past)), future_(std::move(future)), slots_(std::move(slots)) {
  layout_ = process_layout(choi.layout(), past_, future_, slots_);
  choi_ = align_to(choi, layout_);
}

ProcessMatrix::ProcessMatrix(ChoiVector pure, std::vector<std::string> past,
                             std::vector<std::string> future,
                             std::vector<Slot> slots)
    : past_(std::move(past)), future_(std::move(future)), slots_(std::move(slots)) {
  layout_ = process_layout(pure.layout(), past_, future_, slots_);
  pure_ = align_to(pure, layout_);
  if (layout_.total_dim() <= kDenseLimit) choi_ = outer(*pure_);
}

const ChoiMatrix& ProcessMatrix::choi() const {
  if (!choi_)
    throw DimensionError("process of dimension " + std::to_string(dim()) +
                         " is held in pure form only");
  return *choi_;
}

const ChoiVector& ProcessMatrix::pure() const {
  if (!pure_) throw DimensionError("process has no pure form");
  return *pure_;
}

double ProcessMatrix::trace() const {
  if (pure_) return pure_->vec().squaredNorm();
  return choi_->trace().real();
}

double ProcessMatrix::expected_trace() const {
  double t = static_cast<double>(layout_.dim_of(past_));
  for (const auto& s : slots_) t *= static_cast<double>(layout_.dim(s.in));
  return t;
}

double ProcessMatrix::psd_residual() const {
  if (pure_) return 0.0;
  return std::max(0.0, -min_eigenvalue(choi_->mat()));
}

namespace {

std::set<std::string> as_set(const std::vector<std::string>& v) {
  return {v.begin(), v.end()};
}

std::vector<std::string> minus(const std::vector<std::string>& v,
                               const std::string& x) {
  std::vector<std::string> out;
  for (const auto& s : v)
    if (s != x) out.push_back(s);
  return out;
}

}  // namespace

void Comb::validate() const {
  if (layers.size() != slots.size() + 1)
    throw LayoutError("a comb with M slots needs M + 1 layers");
  if (as_set(layers.front().in_labels) != as_set(past))
    throw LayoutError("first layer inputs must be the global past");
  if (as_set(layers.back().out_labels) != as_set(future))
    throw LayoutError("last layer outputs must be the global future");
  for (std::size_t i = 0; i < slots.size(); ++i) {
    const Channel& a = layers[i];
    const Channel& b = layers[i + 1];
    if (!a.choi.layout().contains(slots[i].in) ||
        !b.choi.layout().contains(slots[i].out))
      throw LayoutError("layer " + std::to_string(i) +
                        " does not connect to its slot");
    const auto carry_out = minus(a.out_labels, slots[i].in);
    const auto carry_in = minus(b.in_labels, slots[i].out);
    if (as_set(carry_out) != as_set(carry_in))
      throw LayoutError("ancilla labels break between layers " +
                        std::to_string(i) + " and " + std::to_string(i + 1));
    for (const auto& l : carry_out)
      if (a.choi.layout().dim(l) != b.choi.layout().dim(l))
        throw DimensionError("ancilla '" + l + "' changes dimension");
  }
}

ProcessMatrix comb_to_process(const Comb& c) {
  c.validate();
  ChoiMatrix acc = c.layers.front().choi;
  for (std::size_t i = 1; i < c.layers.size(); ++i)
    acc = link_product(acc, c.layers[i].choi);
  return {std::move(acc), c.past, c.future, c.slots};
}

Comb random_comb(const Layout& past, const std::vector<Slot>& slots,
                 const std::vector<std::size_t>& slot_dims, const Layout& future,
                 std::size_t ancilla_dim, std::mt19937_64& rng) {
  if (slot_dims.size() != slots.size())
    throw DimensionError("one dimension per slot is required");
  Comb c{past.labels(), future.labels(), slots, {}};
  Layout in = past;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    const std::string e = "e" + std::to_string(i + 1);
    const Layout out{{slots[i].in, slot_dims[i]}, {e, ancilla_dim}};
    c.layers.push_back(random_channel(in, out, 1, rng));
    in = Layout{{slots[i].out, slot_dims[i]}, {e, ancilla_dim}};
  }
  c.layers.push_back(random_channel(in, future, 1, rng));
  return c;
}

Comb identity_comb(std::size_t d, std::size_t slots) {
  const Operator id = Operator::Identity(Eigen::Index(d), Eigen::Index(d));
  Comb c{{"P"}, {"F"}, {}, {}};
  std::string prev = "P";
  for (std::size_t i = 1; i <= slots; ++i) {
    const Slot s{"I" + std::to_string(i), "O" + std::to_string(i)};
    c.slots.push_back(s);
    c.layers.push_back(make_channel({id}, prev, s.in));
    prev = s.out;
  }
  c.layers.push_back(make_channel({id}, prev, "F"));
  return c;
}

Channel on_slot(const Channel& c, const Slot& s) {
  if (c.in_labels.size() != 1 || c.out_labels.size() != 1)
    throw LayoutError("slot channels need a single input and output label");
  if (c.in_labels[0] == s.in && c.out_labels[0] == s.out) return c;
  // go through temporaries so that swapped names cannot collide
  Channel t = c.relabel(c.in_labels[0], "\x01in").relabel(c.out_labels[0], "\x01out");
  return t.relabel("\x01in", s.in).relabel("\x01out", s.out);
}

namespace {

Channel as_channel(const ChoiMatrix& acc, const std::vector<std::string>& past,
                   const std::vector<std::string>& future) {
  const Layout target = acc.layout().select(past).concat(acc.layout().select(future));
  return {align_to(acc, target), past, future, {}};
}

void check_slot_dims(const Layout& l, const Slot& s, const Channel& c) {
  if (l.dim(s.in) != c.in_layout().total_dim() ||
      l.dim(s.out) != c.out_layout().total_dim())
    throw DimensionError("channel does not fit slot (" + s.in + ", " + s.out +
                         ")");
}

}  // namespace

std::vector<Operator> kraus_of(const Channel& c) {
  return c.kraus.empty() ? choi_to_kraus(c) : c.kraus;
}

Channel supermap_apply(const ProcessMatrix& s, const std::vector<Channel>& channels) {
  if (channels.size() != s.slots().size())
    throw DimensionError("expected " + std::to_string(s.slots().size()) +
                         " channels, got " + std::to_string(channels.size()));
  std::vector<Channel> placed;
  for (std::size_t i = 0; i < channels.size(); ++i) {
    check_slot_dims(s.layout(), s.slots()[i], channels[i]);
    placed.push_back(on_slot(channels[i], s.slots()[i]));
  }
  if (s.has_dense()) {
    ChoiMatrix acc = s.choi();
    for (const auto& c : placed) acc = link_product(acc, c.choi);
    return as_channel(acc, s.past(), s.future());
  }
  // pure process: one output Kraus operator per tuple of input Kraus operators
  std::vector<std::vector<Operator>> ks;
  for (const auto& c : placed) ks.push_back(kraus_of(c));
  const Layout in = s.layout().select(s.past());
  const Layout out = s.layout().select(s.future());
  std::vector<Operator> result;
  std::vector<std::size_t> idx(ks.size(), 0);
  while (true) {
    ChoiVector v = s.pure();
    for (std::size_t i = 0; i < ks.size(); ++i)
      v = link_product_vectors(
          v, choi_vector_of(ks[i][idx[i]], s.slots()[i].in, s.slots()[i].out));
    result.push_back(operator_of(v, in, out));
    std::size_t k = ks.size();
    while (k-- > 0) {
      if (++idx[k] < ks[k].size()) break;
      idx[k] = 0;
    }
    if (k == std::size_t(-1)) break;
  }
  return make_channel(std::move(result), in, out);
}

Channel supermap_apply(const Comb& c, const std::vector<Channel>& channels) {
  c.validate();
  if (channels.size() != c.slots.size())
    throw DimensionError("expected " + std::to_string(c.slots.size()) +
                         " channels, got " + std::to_string(channels.size()));
  ChoiMatrix acc = c.layers.front().choi;
  for (std::size_t i = 0; i < c.slots.size(); ++i) {
    const Channel placed = on_slot(channels[i], c.slots[i]);
    if (c.layers[i].choi.layout().dim(c.slots[i].in) !=
            placed.in_layout().total_dim() ||
        c.layers[i + 1].choi.layout().dim(c.slots[i].out) !=
            placed.out_layout().total_dim())
      throw DimensionError("channel does not fit slot (" + c.slots[i].in +
                           ", " + c.slots[i].out + ")");
    acc = link_product(acc, placed.choi);
    acc = link_product(acc, c.layers[i + 1].choi);
  }
  return as_channel(acc, c.past, c.future);
}

namespace {

ChoiVector ket(const std::string& label, std::size_t dim, std::size_t i) {
  CVector v = CVector::Zero(static_cast<Eigen::Index>(dim));
  v(static_cast<Eigen::Index>(i)) = 1.0;
  return {Layout{{label, dim}}, std::move(v)};
}

std::size_t qubit_dim(int n) {
  if (n < 1 || n > 8) throw DimensionError("qubit count must be in 1..8");
  return std::size_t{1} << n;
}

const std::vector<std::string>& switch_past() {
  static const std::vector<std::string> p{sw::Pc, sw::Pt};
  return p;
}
const std::vector<std::string>& switch_future() {
  static const std::vector<std::string> f{sw::Fc, sw::Ft};
  return f;
}
const std::vector<Slot>& switch_slots() {
  static const std::vector<Slot> s{sw::A, sw::B};
  return s;
}

Layout switch_layout(int n) {
  const std::size_t d = qubit_dim(n);
  return Layout{{sw::Pc, 2}, {sw::Pt, d}, {sw::AI, d}, {sw::AO, d},
                {sw::BI, d}, {sw::BO, d}, {sw::Fc, 2}, {sw::Ft, d}};
}

// The two control terms of the switch, in the canonical layout.
std::pair<ChoiVector, ChoiVector> switch_terms(int n) {
  const std::size_t d = qubit_dim(n);
  using sw::AI, sw::AO, sw::BI, sw::BO, sw::Pt, sw::Ft;
  ChoiVector s0 = kron(kron(kron(kron(ket(sw::Pc, 2, 0), ket(sw::Fc, 2, 0)),
                                 max_entangled(Pt, AI, d)),
                            max_entangled(AO, BI, d)),
                       max_entangled(BO, Ft, d));
  ChoiVector s1 = kron(kron(kron(kron(ket(sw::Pc, 2, 1), ket(sw::Fc, 2, 1)),
                                 max_entangled(Pt, BI, d)),
                            max_entangled(BO, AI, d)),
                       max_entangled(AO, Ft, d));
  const Layout l = switch_layout(n);
  return {align_to(s0, l), align_to(s1, l)};
}

}  // namespace

ChoiVector switch_vector(int n) {
  auto [s0, s1] = switch_terms(n);
  return s0 + s1;
}

ProcessMatrix switch_process(int n) {
  return {switch_vector(n), switch_past(), switch_future(), switch_slots()};
}

Operator switch_on_unitaries(const Operator& u, const Operator& v) {
  if (u.rows() != v.rows()) throw DimensionError("unitaries differ in dimension");
  if (!is_unitary(u) || !is_unitary(v))
    throw NumericalError("switch_on_unitaries needs unitary inputs");
  const auto d = u.rows();
  Operator out = Operator::Zero(2 * d, 2 * d);
  out.topLeftCorner(d, d) = v * u;
  out.bottomRightCorner(d, d) = u * v;
  return out;
}

Channel switch_oracle_kraus(const std::vector<Operator>& a,
                            const std::vector<Operator>& b) {
  if (a.empty() || b.empty()) throw DimensionError("empty Kraus list");
  const auto d = a.front().rows();
  for (const auto& k : a)
    if (k.rows() != d || k.cols() != d) throw DimensionError("Kraus shape mismatch");
  for (const auto& k : b)
    if (k.rows() != d || k.cols() != d) throw DimensionError("Kraus shape mismatch");
  std::vector<Operator> kraus;
  for (const auto& ak : a)
    for (const auto& bl : b) {
      Operator k = Operator::Zero(2 * d, 2 * d);
      k.topLeftCorner(d, d) = bl * ak;
      k.bottomRightCorner(d, d) = ak * bl;
      kraus.push_back(std::move(k));
    }
  const std::size_t du = static_cast<std::size_t>(d);
  return make_channel(std::move(kraus), Layout{{sw::Pc, 2}, {sw::Pt, du}},
                      Layout{{sw::Fc, 2}, {sw::Ft, du}});
}

Channel switch_oracle_kraus(const Channel& a, const Channel& b) {
  return switch_oracle_kraus(kraus_of(a), kraus_of(b));
}

double ConditionReport::max_residual() const {
  double m = 0.0;
  for (const auto& c : conditions) m = std::max(m, c.residual);
  return m;
}

double ConditionReport::residual(const std::string& name) const {
  for (const auto& c : conditions)
    if (c.name == name) return c.residual;
  throw std::out_of_range("no condition named '" + name + "'");
}

std::string order_name(const std::vector<int>& r) {
  std::string s = "(";
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(r[i]);
  }
  return s + ")";
}

ConditionReport qccc_check(const QcccDecomposition& d) {
  const std::size_t k = d.slots.size();
  if (d.branches.empty()) throw LayoutError("decomposition has no branches");
  if (k == 0) throw LayoutError("decomposition has no slots");
  const Layout& ref = d.branches.begin()->second.layout();
  std::set<std::string> ref_labels;
  for (const auto& l : ref.labels()) ref_labels.insert(l);
  for (const auto& [r, c] : d.branches) {
    std::vector<int> sorted = r;
    std::sort(sorted.begin(), sorted.end());
    bool ok = sorted.size() == k;
    for (std::size_t i = 0; ok && i < k; ++i) ok = sorted[i] == int(i + 1);
    if (!ok)
      throw LayoutError("branch key " + order_name(r) + " is not a permutation");
    std::set<std::string> labels;
    for (const auto& l : c.layout().labels()) labels.insert(l);
    if (labels != ref_labels)
      throw LayoutError("branch layouts differ");
    for (const auto& l : ref.subsystems())
      if (c.layout().dim(l.label) != l.dim)
        throw DimensionError("branch layouts differ in dimensions");
  }
  const auto slot = [&](int i) -> const Slot& { return d.slots[i - 1]; };

  ConditionReport rep;
  std::map<std::vector<int>, CMatrix> prefix;
  for (const auto& [r, c] : d.branches) {
    const std::string tag = order_name(r);
    const double lmin = min_eigenvalue(c.mat());
    rep.min_eigenvalues[tag] = lmin;
    rep.conditions.push_back({"positivity" + tag, std::max(0.0, -lmin)});

    const std::string& o_last = slot(r.back()).out;
    const double dout = static_cast<double>(c.layout().dim(o_last));
    const CMatrix tr_f = partial_trace(c, d.future);
    CMatrix cpr = partial_trace(tr_f, {o_last}) * cplx(1.0 / dout);
    const CMatrix rhs = kron(cpr, CMatrix::identity(c.layout().select({o_last})));
    rep.conditions.push_back({"trace_F" + tag, frobenius_distance(tr_f, rhs)});
    prefix.emplace(r, std::move(cpr));
  }
  for (std::size_t m = k - 1; m >= 1; --m) {
    std::map<std::vector<int>, std::vector<CMatrix>> children;
    for (const auto& [r, c] : prefix) {
      if (r.size() != m + 1) continue;
      std::vector<int> p(r.begin(), r.begin() + static_cast<long>(m));
      children[p].push_back(partial_trace(c, {slot(r.back()).in}));
    }
    for (auto& [p, terms] : children) {
      CMatrix lhs = terms.front();
      for (std::size_t i = 1; i < terms.size(); ++i) lhs = lhs + terms[i];
      const std::string& o = slot(p.back()).out;
      const double dout = static_cast<double>(lhs.layout().dim(o));
      CMatrix cp = partial_trace(lhs, {o}) * cplx(1.0 / dout);
      const CMatrix rhs = kron(cp, CMatrix::identity(lhs.layout().select({o})));
      rep.conditions.push_back(
          {"prefix" + order_name(p), frobenius_distance(lhs, rhs)});
      prefix.emplace(p, std::move(cp));
    }
  }
  std::optional<CMatrix> norm;
  for (const auto& [r, c] : prefix) {
    if (r.size() != 1) continue;
    CMatrix t = partial_trace(c, {slot(r[0]).in});
    norm = norm ? *norm + t : t;
  }
  const Layout past = ref.select(d.past);
  rep.conditions.push_back(
      {"normalization", frobenius_distance(*norm, CMatrix::identity(past))});
  return rep;
}

QcccDecomposition single_order(const ProcessMatrix& p) {
  std::vector<int> r(p.slots().size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = static_cast<int>(i + 1);
  QcccDecomposition d{p.past(), p.future(), p.slots(), {}};
  d.branches.emplace(r, p.choi());
  return d;
}

QcccDecomposition classical_switch_decomposition(int n) {
  auto [s0, s1] = switch_terms(n);
  QcccDecomposition d{switch_past(), switch_future(), switch_slots(), {}};
  d.branches.emplace(std::vector<int>{1, 2}, outer(s0));
  d.branches.emplace(std::vector<int>{2, 1}, outer(s1));
  return d;
}

ProcessMatrix classical_switch(int n) {
  auto [s0, s1] = switch_terms(n);
  return {outer(s0) + outer(s1), switch_past(), switch_future(), switch_slots()};
}

QcccDecomposition naive_switch_split(int n) {
  auto [s0, s1] = switch_terms(n);
  const Operator cross = 0.5 * (s0.vec() * s1.vec().adjoint() +
                                s1.vec() * s0.vec().adjoint());
  const Layout& l = s0.layout();
  QcccDecomposition d{switch_past(), switch_future(), switch_slots(), {}};
  d.branches.emplace(std::vector<int>{1, 2},
                     CMatrix(l, s0.vec() * s0.vec().adjoint() + cross));
  d.branches.emplace(std::vector<int>{2, 1},
                     CMatrix(l, s1.vec() * s1.vec().adjoint() + cross));
  return d;
}

}  // namespace hoq
