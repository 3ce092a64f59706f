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

#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "hoq/supermaps.hpp"

namespace hoq {

/// Orthogonal projection onto the linear span of Choi matrices of combs with
/// slot order `order` (1-based): the commuting product of the maps
/// W -> W - Tr_S W (x) 1_S/d_S + Tr_{S O} W (x) 1_{S O}/d_{S O}, one per
/// causal constraint. Normalization is not imposed.
ChoiMatrix comb_subspace_project(const ChoiMatrix& x, const std::vector<int>& order,
                                 const std::vector<Slot>& slots,
                                 const std::vector<std::string>& future);

/// Replaces `x` by V diag(max(lambda, 0)) V^dag.
ChoiMatrix psd_project(const ChoiMatrix& x);

struct FeasibilityProblem {
  ProcessMatrix target;
  std::vector<std::vector<int>> orders;
  std::size_t max_iters = 2000;
  double tol = 1e-9;
  /// Relaxation of the affine step, in (0, 1]; 1 is plain Dykstra.
  double damping = 1.0;
};

struct FeasibilityResult {
  /// ||sum_r W_r - target||_F with W_r the PSD iterates.
  double residual = 0.0;
  /// Part of the target outside the sum of the order subspaces.
  double affine_residual = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
  std::map<std::vector<int>, ChoiMatrix> branches;
  std::vector<double> residual_trace;
  /// ||W_psd - W_affine||_F per iteration.
  std::vector<double> gap_trace;
  ConditionReport conditions;
};

/// Dykstra alternating projections between {W_r >= 0} and
/// {W_r in comb subspace of order r, sum_r W_r = target}. Supports one or
/// two orders. Deterministic given the problem.
FeasibilityResult qccc_distance(const FeasibilityProblem& p);

/// Whether `trace` is non-decreasing over its final `fraction`, allowing each
/// step to drop by at most `slack` (relative to the value).
bool non_decreasing_tail(const std::vector<double>& trace, double fraction,
                         double slack);

}  // namespace hoq
