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
#include <random>
#include <string>
#include <vector>

#include "hoq/choi.hpp"

namespace hoq {

namespace tol {
inline constexpr double kKrausEig = 1e-10;
inline constexpr double kUnitary = 1e-9;
}  // namespace tol

/// CP map with a Choi matrix on (in_labels..., out_labels...). Kraus
/// operators, when present, map the in-space to the out-space.
struct Channel {
  ChoiMatrix choi;
  std::vector<std::string> in_labels;
  std::vector<std::string> out_labels;
  std::vector<Operator> kraus;

  Layout in_layout() const { return choi.layout().select(in_labels); }
  Layout out_layout() const { return choi.layout().select(out_labels); }

  /// max|Tr_out C - 1_in|.
  double tp_residual() const;
  /// max(0, -lambda_min(C)).
  double cp_residual() const;

  /// Copy with one label renamed, in the Choi and the label lists.
  Channel relabel(const std::string& from, const std::string& to) const;
};

Channel make_channel(std::vector<Operator> kraus, const Layout& in,
                     const Layout& out);
Channel make_channel(std::vector<Operator> kraus, const std::string& in_label,
                     const std::string& out_label);

/// Tensor product of single-qubit Paulis; entries of r must lie in {0,1,2,3}.
Operator pauli(const std::vector<int>& r);

bool is_unitary(const Operator& u, double tol = tol::kUnitary);

Channel unitary_channel(const Operator& u, const std::string& in_label = "A",
                        const std::string& out_label = "B");

Channel mixed_unitary(const std::vector<double>& probs,
                      const std::vector<Operator>& unitaries,
                      const std::string& in_label = "A",
                      const std::string& out_label = "B");

/// Haar unitary from the QR decomposition of a complex Ginibre matrix.
Operator random_unitary(std::size_t dim, std::mt19937_64& rng);
Operator random_unitary(std::size_t dim, std::uint64_t seed);

/// Random CPTP map with `rank` Kraus operators via a Haar Stinespring isometry.
Channel random_channel(std::size_t dim, std::size_t rank, std::mt19937_64& rng,
                       const std::string& in_label = "A",
                       const std::string& out_label = "B");

/// Random CPTP map between arbitrary layouts. The Kraus rank is raised to
/// ceil(d_in / d_out) when needed for an isometric dilation.
Channel random_channel(const Layout& in, const Layout& out, std::size_t rank,
                       std::mt19937_64& rng);

/// Mixed-unitary channel over k Haar unitaries with Dirichlet(1,...,1) weights.
Channel random_mixed_unitary(std::size_t dim, std::size_t k,
                             std::mt19937_64& rng,
                             const std::string& in_label = "A",
                             const std::string& out_label = "B");

/// C * rho, with rho on the channel's input labels.
CMatrix apply_channel(const Channel& c, const CMatrix& rho);

/// Kraus operators from the Choi eigendecomposition (eigenvalues > 1e-10).
std::vector<Operator> choi_to_kraus(const Channel& c);

}  // namespace hoq
