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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace hoq {

using cplx = std::complex<double>;
using Operator = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// Raised for malformed layouts, unknown labels and label collisions.
class LayoutError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when operand shapes or dimensions disagree.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a numerical precondition (hermiticity, positivity, ...) fails.
class NumericalError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace tol {
inline constexpr double kHermiticity = 1e-9;
inline constexpr double kRank = 1e-10;
}  // namespace tol

struct Subsystem {
  std::string label;
  std::size_t dim = 1;

  bool operator==(const Subsystem&) const = default;
};

/// Ordered list of labelled tensor factors. The leftmost factor is the most
/// significant digit of the flat computational-basis index.
class Layout {
 public:
  Layout() = default;
  Layout(std::vector<Subsystem> subsystems);
  Layout(std::initializer_list<Subsystem> subsystems)
      : Layout(std::vector<Subsystem>(subsystems)) {}

  const std::vector<Subsystem>& subsystems() const { return subs_; }
  std::size_t size() const { return subs_.size(); }
  bool empty() const { return subs_.empty(); }
  std::size_t total_dim() const { return total_; }

  bool contains(const std::string& label) const;
  /// Position of `label`; throws LayoutError when absent.
  std::size_t position(const std::string& label) const;
  std::size_t dim(const std::string& label) const;
  std::size_t dim_of(const std::vector<std::string>& labels) const;
  std::vector<std::string> labels() const;

  /// Subsystems in the order given by `labels`, which must all be present.
  Layout select(const std::vector<std::string>& labels) const;
  /// Subsystems not named in `labels`, keeping order.
  Layout without(const std::vector<std::string>& labels) const;
  /// Concatenation; throws LayoutError on a label collision.
  Layout concat(const Layout& other) const;
  Layout renamed(const std::string& from, const std::string& to) const;

  /// Digit strides for the big-endian encoding.
  std::vector<std::size_t> strides() const;

  bool operator==(const Layout&) const = default;

 private:
  std::vector<Subsystem> subs_;
  std::size_t total_ = 1;
};

/// For every flat index of `target` (a reordering of a subset of `source`
/// factors), the contribution of those digits to the flat index of `source`.
std::vector<std::size_t> index_map(const Layout& source, const Layout& target);

/// Square complex matrix over a Layout.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(Layout layout, Operator entries);

  static CMatrix identity(Layout layout);
  static CMatrix zero(Layout layout);

  const Layout& layout() const { return layout_; }
  const Operator& mat() const { return m_; }
  std::size_t dim() const { return layout_.total_dim(); }
  cplx trace() const { return m_.trace(); }

  CMatrix adjoint() const { return {layout_, m_.adjoint()}; }
  CMatrix relabel(const std::string& from, const std::string& to) const {
    return {layout_.renamed(from, to), m_};
  }

  CMatrix operator+(const CMatrix& o) const;
  CMatrix operator-(const CMatrix& o) const;
  CMatrix operator*(cplx s) const { return {layout_, m_ * s}; }

 private:
  Layout layout_;
  Operator m_;
};

inline CMatrix operator*(cplx s, const CMatrix& m) { return m * s; }

CMatrix kron(const CMatrix& a, const CMatrix& b);
Operator kron(const Operator& a, const Operator& b);
CMatrix partial_trace(const CMatrix& m, const std::vector<std::string>& labels);
CMatrix partial_transpose(const CMatrix& m,
                          const std::vector<std::string>& labels);
CMatrix permute_subsystems(const CMatrix& m,
                           const std::vector<std::string>& new_order);

/// Reorders `m` to the factor order of `like` (same label set).
CMatrix align_to(const CMatrix& m, const Layout& like);

/// `m ⊗ 1` on the extra factors, then reordered into `target`.
CMatrix embed_identity(const CMatrix& m, const Layout& target);

struct EigenDecomposition {
  Eigen::VectorXd values;  // ascending
  Operator vectors;        // columns
};

/// Dense Hermitian eigendecomposition. Throws NumericalError when
/// max|m - m†| exceeds `herm_tol`.
EigenDecomposition hermitian_eig(const Operator& m,
                                 double herm_tol = tol::kHermiticity);
EigenDecomposition hermitian_eig(const CMatrix& m,
                                 double herm_tol = tol::kHermiticity);

double min_eigenvalue(const Operator& m);

/// Number of singular values above rel_tol times the largest one.
std::size_t numeric_rank(const Operator& m, double rel_tol = tol::kRank);
std::size_t numeric_rank(const CMatrix& m, double rel_tol = tol::kRank);

double max_abs(const Operator& m);
double hermiticity_residual(const Operator& m);

/// Frobenius distance after aligning `b` to `a`'s factor order.
double frobenius_distance(const CMatrix& a, const CMatrix& b);

}  // namespace hoq
