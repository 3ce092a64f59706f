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

#include "hoq/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#define LAPACK_COMPLEX_CPP
#include <lapacke.h>

namespace hoq {

Layout::Layout(std::vector<Subsystem> subsystems) : subs_(std::move(subsystems)) {
  std::set<std::string> seen;
  for (const auto& s : subs_) {
    if (s.dim < 1) throw LayoutError("subsystem '" + s.label + "' has dim 0");
    if (!seen.insert(s.label).second)
      throw LayoutError("duplicate label '" + s.label + "'");
    total_ *= s.dim;
  }
}

bool Layout::contains(const std::string& label) const {
  return std::any_of(subs_.begin(), subs_.end(),
                     [&](const Subsystem& s) { return s.label == label; });
}

std::size_t Layout::position(const std::string& label) const {
  for (std::size_t i = 0; i < subs_.size(); ++i)
    if (subs_[i].label == label) return i;
  throw LayoutError("unknown label '" + label + "'");
}

std::size_t Layout::dim(const std::string& label) const {
  return subs_[position(label)].dim;
}

std::size_t Layout::dim_of(const std::vector<std::string>& labels) const {
  std::size_t d = 1;
  for (const auto& l : labels) d *= dim(l);
  return d;
}

std::vector<std::string> Layout::labels() const {
  std::vector<std::string> out;
  out.reserve(subs_.size());
  for (const auto& s : subs_) out.push_back(s.label);
  return out;
}

Layout Layout::select(const std::vector<std::string>& labels) const {
  std::vector<Subsystem> out;
  out.reserve(labels.size());
  for (const auto& l : labels) out.push_back(subs_[position(l)]);
  return Layout(std::move(out));
}

Layout Layout::without(const std::vector<std::string>& labels) const {
  for (const auto& l : labels) position(l);
  std::vector<Subsystem> out;
  for (const auto& s : subs_)
    if (std::find(labels.begin(), labels.end(), s.label) == labels.end())
      out.push_back(s);
  return Layout(std::move(out));
}

Layout Layout::concat(const Layout& other) const {
  std::vector<Subsystem> out = subs_;
  out.insert(out.end(), other.subs_.begin(), other.subs_.end());
  return Layout(std::move(out));
}

Layout Layout::renamed(const std::string& from, const std::string& to) const {
  std::vector<Subsystem> out = subs_;
  out[position(from)].label = to;
  return Layout(std::move(out));
}

std::vector<std::size_t> Layout::strides() const {
  std::vector<std::size_t> st(subs_.size(), 1);
  for (std::size_t i = subs_.size(); i-- > 1;) st[i - 1] = st[i] * subs_[i].dim;
  return st;
}

std::vector<std::size_t> index_map(const Layout& source, const Layout& target) {
  const auto src_strides = source.strides();
  std::vector<std::size_t> stride_in_source;
  std::vector<std::size_t> dims;
  for (const auto& s : target.subsystems()) {
    const std::size_t p = source.position(s.label);
    if (source.subsystems()[p].dim != s.dim)
      throw DimensionError("label '" + s.label + "' has mismatched dim");
    stride_in_source.push_back(src_strides[p]);
    dims.push_back(s.dim);
  }
  std::vector<std::size_t> out(target.total_dim());
  std::vector<std::size_t> digit(dims.size(), 0);
  std::size_t offset = 0;
  for (std::size_t t = 0; t < out.size(); ++t) {
    out[t] = offset;
    // odometer increment, least significant digit last
    for (std::size_t k = dims.size(); k-- > 0;) {
      if (++digit[k] < dims[k]) {
        offset += stride_in_source[k];
        break;
      }
      offset -= (dims[k] - 1) * stride_in_source[k];
      digit[k] = 0;
    }
  }
  return out;
}

CMatrix::CMatrix(Layout layout, Operator entries)
    : layout_(std::move(layout)), m_(std::move(entries)) {
  const auto d = static_cast<Eigen::Index>(layout_.total_dim());
  if (m_.rows() != d || m_.cols() != d)
    throw DimensionError("matrix shape does not match layout dimension " +
                         std::to_string(d));
}

CMatrix CMatrix::identity(Layout layout) {
  const auto d = static_cast<Eigen::Index>(layout.total_dim());
  return {std::move(layout), Operator::Identity(d, d)};
}

CMatrix CMatrix::zero(Layout layout) {
  const auto d = static_cast<Eigen::Index>(layout.total_dim());
  return {std::move(layout), Operator::Zero(d, d)};
}

CMatrix CMatrix::operator+(const CMatrix& o) const {
  return {layout_, m_ + align_to(o, layout_).mat()};
}

CMatrix CMatrix::operator-(const CMatrix& o) const {
  return {layout_, m_ - align_to(o, layout_).mat()};
}

Operator kron(const Operator& a, const Operator& b) {
  Operator out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  Layout layout = a.layout().concat(b.layout());
  return {std::move(layout), kron(a.mat(), b.mat())};
}

CMatrix partial_trace(const CMatrix& m, const std::vector<std::string>& labels) {
  const Layout keep = m.layout().without(labels);
  const Layout traced = m.layout().select(labels);
  const auto mk = index_map(m.layout(), keep);
  const auto mt = index_map(m.layout(), traced);
  const auto dk = static_cast<Eigen::Index>(mk.size());
  Operator out = Operator::Zero(dk, dk);
  const Operator& src = m.mat();
  for (Eigen::Index j = 0; j < dk; ++j)
    for (Eigen::Index i = 0; i < dk; ++i) {
      cplx acc = 0.0;
      for (std::size_t t : mt) acc += src(mk[i] + t, mk[j] + t);
      out(i, j) = acc;
    }
  return {keep, std::move(out)};
}

CMatrix partial_transpose(const CMatrix& m,
                          const std::vector<std::string>& labels) {
  if (labels.empty()) return m;
  const Layout& L = m.layout();
  const Layout traced = L.select(labels);
  const Layout rest = L.without(labels);
  const auto mt = index_map(L, traced);
  const auto mr = index_map(L, rest);
  const Operator& src = m.mat();
  Operator out(src.rows(), src.cols());
  for (std::size_t rj = 0; rj < mr.size(); ++rj)
    for (std::size_t tj = 0; tj < mt.size(); ++tj)
      for (std::size_t ri = 0; ri < mr.size(); ++ri)
        for (std::size_t ti = 0; ti < mt.size(); ++ti)
          out(mr[ri] + mt[ti], mr[rj] + mt[tj]) =
              src(mr[ri] + mt[tj], mr[rj] + mt[ti]);
  return {L, std::move(out)};
}

CMatrix permute_subsystems(const CMatrix& m,
                           const std::vector<std::string>& new_order) {
  if (new_order.size() != m.layout().size())
    throw LayoutError("new order is not a permutation of the layout labels");
  const Layout target = m.layout().select(new_order);
  const auto map = index_map(m.layout(), target);
  const auto d = static_cast<Eigen::Index>(map.size());
  Operator out(d, d);
  for (Eigen::Index j = 0; j < d; ++j)
    for (Eigen::Index i = 0; i < d; ++i) out(i, j) = m.mat()(map[i], map[j]);
  return {target, std::move(out)};
}

CMatrix align_to(const CMatrix& m, const Layout& like) {
  if (m.layout() == like) return m;
  if (m.layout().size() != like.size())
    throw LayoutError("layouts carry different label sets");
  CMatrix out = permute_subsystems(m, like.labels());
  if (!(out.layout() == like))
    throw DimensionError("layouts disagree on subsystem dimensions");
  return out;
}

CMatrix embed_identity(const CMatrix& m, const Layout& target) {
  const Layout extra = target.without(m.layout().labels());
  return align_to(kron(m, CMatrix::identity(extra)), target);
}

double max_abs(const Operator& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double hermiticity_residual(const Operator& m) {
  return max_abs(m - m.adjoint());
}

namespace {

// LAPACK zheevd; `jobz` is 'V' or 'N'.
Eigen::VectorXd zheevd(Operator& a, char jobz) {
  const auto n = static_cast<lapack_int>(a.rows());
  Eigen::VectorXd w(n);
  if (n == 0) return w;
  const lapack_int info = LAPACKE_zheevd(
      LAPACK_COL_MAJOR, jobz, 'L', n,
      reinterpret_cast<lapack_complex_double*>(a.data()), n, w.data());
  if (info != 0)
    throw NumericalError("zheevd failed with info " + std::to_string(info));
  return w;
}

}  // namespace

EigenDecomposition hermitian_eig(const Operator& m, double herm_tol) {
  if (m.rows() != m.cols()) throw DimensionError("eig of a non-square matrix");
  if (hermiticity_residual(m) > herm_tol)
    throw NumericalError("matrix is not Hermitian within tolerance");
  Operator a = 0.5 * (m + m.adjoint());
  Eigen::VectorXd w = zheevd(a, 'V');
  return {std::move(w), std::move(a)};
}

EigenDecomposition hermitian_eig(const CMatrix& m, double herm_tol) {
  return hermitian_eig(m.mat(), herm_tol);
}

double min_eigenvalue(const Operator& m) {
  Operator a = 0.5 * (m + m.adjoint());
  Eigen::VectorXd w = zheevd(a, 'N');
  return w.size() ? w(0) : 0.0;
}

std::size_t numeric_rank(const Operator& m, double rel_tol) {
  if (m.size() == 0) return 0;
  Eigen::BDCSVD<Operator> svd(m);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  std::size_t r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > rel_tol * s(0)) ++r;
  return r;
}

std::size_t numeric_rank(const CMatrix& m, double rel_tol) {
  return numeric_rank(m.mat(), rel_tol);
}

double frobenius_distance(const CMatrix& a, const CMatrix& b) {
  return (a.mat() - align_to(b, a.layout()).mat()).norm();
}

}  // namespace hoq
