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

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hoq/supermaps.hpp"

namespace hoq {

struct LemmaReport {
  std::string name;
  std::map<std::string, double> parameters;
  std::vector<std::pair<std::string, double>> residuals;
  bool verdict = false;
  std::uint64_t seed = 0;

  double residual(const std::string& key) const;
};

/// Span property: vectors phi with t |phi><phi| <= sum_i |psi_i><psi_i| lie in
/// span{psi_i}. Part (a) builds phi in the span at the largest admissible
/// scale; part (b) adds an orthogonal component and expects the operator
/// inequality to break.
LemmaReport span_lemma_check(std::size_t dim, std::size_t count,
                             std::uint64_t seed);

enum class MatrixSet { A, B, C, Listing };

/// Parameters of a linear-independence check. `Listing` is the d = N = 2
/// construction of the reference MATLAB rank script, with its loop order and
/// permutation order kept. A non-zero `basis_seed` conjugates every member by
/// one fixed Haar unitary before stacking.
struct RankCheckSpec {
  std::size_t d = 2;
  std::size_t M = 1;
  std::size_t N = 1;
  MatrixSet which = MatrixSet::B;
  std::uint64_t basis_seed = 0;
};

/// Stacked column-major vectorisations of every family member.
Operator set_family_matrix(const RankCheckSpec& spec);

/// rank and column count of set_family_matrix; verdict = full column rank.
LemmaReport set_independence_check(const RankCheckSpec& spec);

/// Upper bound on rows * columns of the stacked matrix.
inline constexpr std::size_t kRankBudget = 10'000'000;

/// Slot roles for the expansion identity: 'A' slots receive the K-element
/// family, 'B' slots the L-element family.
/// S applied to uniform mixtures versus the K^M L^N average of S applied to
/// unitary tuples. `perturbation` adds eps * H (unit-norm Hermitian) to S on
/// the mixture side only.
LemmaReport multilinearity_expansion_check(const ProcessMatrix& s,
                                           const std::string& roles,
                                           std::size_t k, std::size_t l,
                                           std::uint64_t seed,
                                           double perturbation = 0.0);

/// Gram rank of {|S>> * (|U_1>> (x) |V>>), |S>> * (|U_2>> (x) |V>>)} over all
/// single-qubit Pauli triples; expects rank 2 exactly when U_1 != U_2.
LemmaReport branch_support_check(std::uint64_t seed = 0);

std::string to_string(MatrixSet s);

}  // namespace hoq
