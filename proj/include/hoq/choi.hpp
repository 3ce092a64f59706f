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

#include <string>
#include <vector>

#include "hoq/tensor.hpp"

namespace hoq {

using ChoiMatrix = CMatrix;

/// Complex vector over a Layout: Choi vectors |V>> and pure process vectors.
class ChoiVector {
 public:
  ChoiVector() = default;
  ChoiVector(Layout layout, CVector amplitudes);

  const Layout& layout() const { return layout_; }
  const CVector& vec() const { return v_; }
  std::size_t dim() const { return layout_.total_dim(); }

  ChoiVector relabel(const std::string& from, const std::string& to) const {
    return {layout_.renamed(from, to), v_};
  }

  ChoiVector operator+(const ChoiVector& o) const;
  ChoiVector operator*(cplx s) const { return {layout_, v_ * s}; }

 private:
  Layout layout_;
  CVector v_;
};

ChoiVector kron(const ChoiVector& a, const ChoiVector& b);
ChoiVector permute_subsystems(const ChoiVector& v,
                              const std::vector<std::string>& new_order);
ChoiVector align_to(const ChoiVector& v, const Layout& like);

/// |v><v| on the same layout.
ChoiMatrix outer(const ChoiVector& v);

/// |V>> = sum_i |i> (x) V|i>, on layout (in_label, out_label).
ChoiVector choi_vector_of(const Operator& op, const std::string& in_label,
                          const std::string& out_label);

/// Multi-factor form: layout is `in` followed by `out`.
ChoiVector choi_vector_of(const Operator& op, const Layout& in,
                          const Layout& out);

/// The operator whose Choi vector is `v` (inverse of choi_vector_of).
Operator operator_of(const ChoiVector& v, const std::string& in_label,
                     const std::string& out_label);
Operator operator_of(const ChoiVector& v, const Layout& in, const Layout& out);

/// sum_k |K_k>><<K_k|.
ChoiMatrix choi_matrix_of_kraus(const std::vector<Operator>& kraus,
                                const std::string& in_label,
                                const std::string& out_label);
ChoiMatrix choi_matrix_of_kraus(const std::vector<Operator>& kraus,
                                const Layout& in, const Layout& out);

/// Unnormalised maximally entangled vector sum_i |i>|i>.
ChoiVector max_entangled(const std::string& label_a, const std::string& label_b,
                         std::size_t dim);

/// Q * R = Tr_B[(Q^{T_B} (x) 1_C)(1_A (x) R)], B = labels shared by name.
/// Result layout: Q's unshared factors, then R's unshared factors.
ChoiMatrix link_product(const ChoiMatrix& q, const ChoiMatrix& r);

/// |q>> * |r>> = sum_i (1 (x) <i|_B)|q>> (x) (<i|_B (x) 1)|r>>.
ChoiVector link_product_vectors(const ChoiVector& q, const ChoiVector& r);

}  // namespace hoq
