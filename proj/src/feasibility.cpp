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

#include "hoq/feasibility.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace hoq {

namespace {

// _S W = Tr_S W (x) 1_S / d_S, restored to W's layout.
CMatrix replace(const CMatrix& w, const std::vector<std::string>& s) {
  const Layout& l = w.layout();
  const auto mk = index_map(l, l.without(s));
  const auto mt = index_map(l, l.select(s));
  const auto dk = Eigen::Index(mk.size());
  const Operator& src = w.mat();
  Operator out = Operator::Zero(src.rows(), src.cols());
  const double inv = 1.0 / double(mt.size());
  for (Eigen::Index j = 0; j < dk; ++j)
    for (Eigen::Index i = 0; i < dk; ++i) {
      cplx acc = 0.0;
      for (std::size_t t : mt) acc += src(mk[i] + t, mk[j] + t);
      acc *= inv;
      for (std::size_t t : mt) out(mk[i] + t, mk[j] + t) = acc;
    }
  return {l, std::move(out)};
}

void check_order(const std::vector<int>& order, std::size_t slots) {
  std::vector<int> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  bool ok = sorted.size() == slots;
  for (std::size_t i = 0; ok && i < slots; ++i) ok = sorted[i] == int(i + 1);
  if (!ok) throw LayoutError("order " + order_name(order) + " is not a permutation");
}

}  // namespace

ChoiMatrix comb_subspace_project(const ChoiMatrix& x, const std::vector<int>& order,
                                 const std::vector<Slot>& slots,
                                 const std::vector<std::string>& future) {
  check_order(order, slots.size());
  // S runs F; I_last O_last F; ...; each constraint adds the preceding O
  CMatrix w = x;
  std::vector<std::string> s = future;
  for (std::size_t k = order.size(); k-- > 0;) {
    const Slot& sl = slots[std::size_t(order[k] - 1)];
    std::vector<std::string> so = s;
    so.push_back(sl.out);
    CMatrix next = w - replace(w, s);
    next = next + replace(w, so);
    w = std::move(next);
    s = std::move(so);
    s.push_back(sl.in);
  }
  return w;
}

ChoiMatrix psd_project(const ChoiMatrix& x) {
  const EigenDecomposition e = hermitian_eig(x);
  const Eigen::Index n = e.values.size();
  Eigen::Index neg = 0;
  while (neg < n && e.values(neg) < 0.0) ++neg;
  // rebuild from whichever side of the spectrum is smaller
  if (neg <= n - neg) {
    const Operator b = e.vectors.leftCols(neg) *
                       e.values.head(neg).cwiseAbs().cwiseSqrt().asDiagonal();
    Operator herm = 0.5 * (x.mat() + x.mat().adjoint());
    herm.noalias() += b * b.adjoint();
    return {x.layout(), std::move(herm)};
  }
  const Operator b = e.vectors.rightCols(n - neg) *
                     e.values.tail(n - neg).cwiseSqrt().asDiagonal();
  return {x.layout(), b * b.adjoint()};
}

bool non_decreasing_tail(const std::vector<double>& trace, double fraction,
                         double slack) {
  if (trace.size() < 2) return true;
  const auto start = std::size_t(double(trace.size()) * (1.0 - fraction));
  for (std::size_t i = start + 1; i < trace.size(); ++i)
    if (trace[i] < trace[i - 1] - slack * std::abs(trace[i - 1])) return false;
  return true;
}

FeasibilityResult qccc_distance(const FeasibilityProblem& p) {
  const ProcessMatrix& t = p.target;
  if (p.orders.empty()) throw LayoutError("no orders given");
  if (p.orders.size() > 2)
    throw DimensionError("at most two orders are supported");
  if (!(p.tol > 0.0)) throw DimensionError("tol must be positive");
  if (!(p.damping > 0.0 && p.damping <= 1.0))
    throw DimensionError("damping must lie in (0, 1]");
  std::set<std::vector<int>> seen;
  for (const auto& r : p.orders) {
    check_order(r, t.slots().size());
    if (!seen.insert(r).second) throw LayoutError("repeated order " + order_name(r));
  }
  const ChoiMatrix& target = t.choi();
  const std::size_t nr = p.orders.size();
  auto proj = [&](std::size_t i, const CMatrix& x) {
    return comb_subspace_project(x, p.orders[i], t.slots(), t.future());
  };

  // Orthogonal pieces of the target: E1 T, E2 T, E12 T, E0 T.
  std::vector<CMatrix> own(nr);
  CMatrix shared = CMatrix::zero(target.layout());
  if (nr == 1) {
    own[0] = proj(0, target);
  } else {
    const CMatrix p2t = proj(1, target);
    shared = proj(0, p2t);
    own[0] = proj(0, target) - shared;
    own[1] = p2t - shared;
  }
  CMatrix covered = shared;
  for (const auto& o : own) covered = covered + o;

  FeasibilityResult res;
  res.affine_residual = frobenius_distance(target, covered);

  // Closed-form projection onto the affine coupling set.
  auto affine = [&](const std::vector<CMatrix>& y) {
    if (nr == 1) return std::vector<CMatrix>{own[0]};
    const CMatrix diff = proj(0, proj(1, y[0] - y[1]));
    return std::vector<CMatrix>{(diff + shared) * cplx(0.5) + own[0],
                                (shared - diff) * cplx(0.5) + own[1]};
  };

  std::vector<CMatrix> x(nr, target * cplx(1.0 / double(nr)));
  x = affine(x);
  std::vector<CMatrix> corr(nr, CMatrix::zero(target.layout()));
  std::vector<CMatrix> y(nr);
  double prev = -1.0;
  std::size_t flat = 0;
  for (std::size_t it = 0; it < p.max_iters; ++it) {
    for (std::size_t i = 0; i < nr; ++i) {
      const CMatrix z = x[i] + corr[i];
      y[i] = psd_project(z);
      corr[i] = z - y[i];
    }
    std::vector<CMatrix> xa = affine(y);
    double gap = 0.0;
    CMatrix sum = CMatrix::zero(target.layout());
    for (std::size_t i = 0; i < nr; ++i) {
      if (p.damping != 1.0) xa[i] = x[i] + (xa[i] - x[i]) * cplx(p.damping);
      const double g = frobenius_distance(y[i], xa[i]);
      gap += g * g;
      sum = sum + y[i];
    }
    x = std::move(xa);
    const double r = frobenius_distance(sum, target);
    res.residual_trace.push_back(r);
    res.gap_trace.push_back(std::sqrt(gap));
    res.iterations = it + 1;
    if (r < p.tol) {
      res.converged = true;
      break;
    }
    flat = prev >= 0.0 && std::abs(r - prev) <= p.tol * r ? flat + 1 : 0;
    prev = r;
    if (flat >= 10) {
      res.converged = true;
      break;
    }
  }
  res.residual = res.residual_trace.empty() ? 0.0 : res.residual_trace.back();
  QcccDecomposition d{t.past(), t.future(), t.slots(), {}};
  for (std::size_t i = 0; i < nr; ++i) {
    res.branches.emplace(p.orders[i], y[i]);
    d.branches.emplace(p.orders[i], y[i]);
  }
  res.conditions = qccc_check(d);
  return res;
}

}  // namespace hoq
