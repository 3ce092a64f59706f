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

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hoq/channels.hpp"

namespace hoq {

struct Slot {
  std::string in;
  std::string out;

  bool operator==(const Slot&) const = default;
};

/// Dense process matrices above this dimension are kept in pure form only.
inline constexpr std::size_t kDenseLimit = 4096;

/// Choi operator of a supermap with global past, slots (I_i, O_i) and global
/// future. Rank-one processes may be stored as a vector; the dense matrix is
/// then materialised only when it is at most kDenseLimit wide.
class ProcessMatrix {
 public:
  ProcessMatrix() = default;
  ProcessMatrix(ChoiMatrix choi, std::vector<std::string> past,
                std::vector<std::string> future, std::vector<Slot> slots);
  ProcessMatrix(ChoiVector pure, std::vector<std::string> past,
                std::vector<std::string> future, std::vector<Slot> slots);

  const std::vector<std::string>& past() const { return past_; }
  const std::vector<std::string>& future() const { return future_; }
  const std::vector<Slot>& slots() const { return slots_; }
  const Layout& layout() const { return layout_; }
  std::size_t dim() const { return layout_.total_dim(); }

  bool has_dense() const { return choi_.has_value(); }
  bool has_pure() const { return pure_.has_value(); }
  /// Throws DimensionError when only the pure form is held.
  const ChoiMatrix& choi() const;
  const ChoiVector& pure() const;

  double trace() const;
  /// d^P times the product of slot input dimensions.
  double expected_trace() const;
  double psd_residual() const;

 private:
  void check_labels() const;

  Layout layout_;
  std::optional<ChoiMatrix> choi_;
  std::optional<ChoiVector> pure_;
  std::vector<std::string> past_, future_;
  std::vector<Slot> slots_;
};

/// Canonical factor order: past, I_1, O_1, ..., I_M, O_M, future.
Layout process_layout(const Layout& source, const std::vector<std::string>& past,
                      const std::vector<std::string>& future,
                      const std::vector<Slot>& slots);

/// Fixed-order comb V_0, ..., V_M. Layer i outputs I_{i+1} plus ancillas that
/// layer i+1 takes together with O_{i+1}.
struct Comb {
  std::vector<std::string> past, future;
  std::vector<Slot> slots;
  std::vector<Channel> layers;

  /// Throws LayoutError when the labels do not chain.
  void validate() const;
};

ProcessMatrix comb_to_process(const Comb& c);

/// Comb with random CPTP layers; ancillas are labelled e1, e2, ...
Comb random_comb(const Layout& past, const std::vector<Slot>& slots,
                 const std::vector<std::size_t>& slot_dims, const Layout& future,
                 std::size_t ancilla_dim, std::mt19937_64& rng);

/// The comb V_0 = identity P -> I_1, V_i = identity O_i -> I_{i+1},
/// V_M = identity O_M -> F (all of equal dimension d).
Comb identity_comb(std::size_t d, std::size_t slots);

/// Channel relabelled onto a slot (single input and output label).
Channel on_slot(const Channel& c, const Slot& s);

/// S * (C_1 (x) ... (x) C_M), as a channel from the past to the future.
Channel supermap_apply(const ProcessMatrix& s, const std::vector<Channel>& channels);
/// Same map, contracted layer by layer through the comb.
Channel supermap_apply(const Comb& c, const std::vector<Channel>& channels);

namespace sw {
inline const std::string Pc = "Pc", Pt = "Pt", AI = "AI", AO = "AO", BI = "BI",
                         BO = "BO", Fc = "Fc", Ft = "Ft";
inline const Slot A{AI, AO}, B{BI, BO};
}  // namespace sw

ChoiVector switch_vector(int n);
ProcessMatrix switch_process(int n);

/// |0><0| (x) VU + |1><1| (x) UV, control factor first.
Operator switch_on_unitaries(const Operator& u, const Operator& v);

/// Channel with Kraus operators |0><0| (x) B_l A_k + |1><1| (x) A_k B_l.
Channel switch_oracle_kraus(const std::vector<Operator>& a,
                            const std::vector<Operator>& b);
Channel switch_oracle_kraus(const Channel& a, const Channel& b);

/// Kraus operators of a channel, extracted from the Choi when absent.
std::vector<Operator> kraus_of(const Channel& c);

/// Branches indexed by 1-based slot permutations.
struct QcccDecomposition {
  std::vector<std::string> past, future;
  std::vector<Slot> slots;
  std::map<std::vector<int>, ChoiMatrix> branches;
};

struct Condition {
  std::string name;
  double residual = 0.0;
};

struct ConditionReport {
  std::vector<Condition> conditions;
  std::map<std::string, double> min_eigenvalues;

  double max_residual() const;
  bool passed(double tol = 1e-9) const { return max_residual() <= tol; }
  double residual(const std::string& name) const;
};

ConditionReport qccc_check(const QcccDecomposition& d);

QcccDecomposition single_order(const ProcessMatrix& p);

/// sum_c |cc><cc|^{Pc Fc} (x) W_c with W_0 the A-then-B comb and W_1 the
/// B-then-A comb. Branch (1,2) is the c = 0 term.
QcccDecomposition classical_switch_decomposition(int n);
ProcessMatrix classical_switch(int n);

/// Cut of |S>><<S| into its two control terms, each keeping half of the cross
/// terms: |s_r><s_r| + (|s_0><s_1| + |s_1><s_0|)/2.
QcccDecomposition naive_switch_split(int n);

std::string order_name(const std::vector<int>& r);

}  // namespace hoq
