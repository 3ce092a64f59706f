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

#include "hoq/channels.hpp"

#include <algorithm>
#include <cmath>

namespace hoq {

double Channel::tp_residual() const {
  const CMatrix marginal = partial_trace(choi, out_labels);
  const Layout in = choi.layout().select(in_labels);
  return max_abs(align_to(marginal, in).mat() -
                 Operator::Identity(marginal.dim(), marginal.dim()));
}

double Channel::cp_residual() const {
  return std::max(0.0, -min_eigenvalue(choi.mat()));
}

Channel Channel::relabel(const std::string& from, const std::string& to) const {
  Channel out = *this;
  out.choi = choi.relabel(from, to);
  std::replace(out.in_labels.begin(), out.in_labels.end(), from, to);
  std::replace(out.out_labels.begin(), out.out_labels.end(), from, to);
  return out;
}

Channel make_channel(std::vector<Operator> kraus, const Layout& in,
                     const Layout& out) {
  ChoiMatrix choi = choi_matrix_of_kraus(kraus, in, out);
  return {std::move(choi), in.labels(), out.labels(), std::move(kraus)};
}

Channel make_channel(std::vector<Operator> kraus, const std::string& in_label,
                     const std::string& out_label) {
  if (kraus.empty()) throw DimensionError("empty Kraus list");
  const Layout in{{in_label, std::size_t(kraus.front().cols())}};
  const Layout out{{out_label, std::size_t(kraus.front().rows())}};
  return make_channel(std::move(kraus), in, out);
}

Operator pauli(const std::vector<int>& r) {
  if (r.empty()) throw DimensionError("Pauli index must be non-empty");
  const cplx i{0.0, 1.0};
  Operator out = Operator::Identity(1, 1);
  for (int k : r) {
    Operator s(2, 2);
    switch (k) {
      case 0: s << 1, 0, 0, 1; break;
      case 1: s << 0, 1, 1, 0; break;
      case 2: s << 0, -i, i, 0; break;
      case 3: s << 1, 0, 0, -1; break;
      default: throw DimensionError("Pauli index out of range");
    }
    out = kron(out, s);
  }
  return out;
}

bool is_unitary(const Operator& u, double tol) {
  if (u.rows() != u.cols()) return false;
  return max_abs(u.adjoint() * u - Operator::Identity(u.rows(), u.cols())) <=
         tol;
}

Channel unitary_channel(const Operator& u, const std::string& in_label,
                        const std::string& out_label) {
  if (!is_unitary(u)) throw NumericalError("operator is not unitary");
  return make_channel({u}, in_label, out_label);
}

Channel mixed_unitary(const std::vector<double>& probs,
                      const std::vector<Operator>& unitaries,
                      const std::string& in_label,
                      const std::string& out_label) {
  if (probs.size() != unitaries.size() || probs.empty())
    throw DimensionError("probabilities and unitaries differ in count");
  double total = 0.0;
  for (double p : probs) {
    if (p < 0.0) throw NumericalError("negative probability");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-12)
    throw NumericalError("probabilities do not sum to one");
  std::vector<Operator> kraus;
  for (std::size_t k = 0; k < probs.size(); ++k) {
    if (!is_unitary(unitaries[k])) throw NumericalError("operator is not unitary");
    if (unitaries[k].rows() != unitaries.front().rows())
      throw DimensionError("unitaries differ in dimension");
    if (probs[k] > 0.0) kraus.push_back(std::sqrt(probs[k]) * unitaries[k]);
  }
  return make_channel(std::move(kraus), in_label, out_label);
}

Operator random_unitary(std::size_t dim, std::mt19937_64& rng) {
  if (dim == 0) throw DimensionError("dimension must be positive");
  std::normal_distribution<double> g(0.0, 1.0);
  const auto n = static_cast<Eigen::Index>(dim);
  Operator z(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i) {
      const double re = g(rng);
      const double im = g(rng);
      z(i, j) = cplx(re, im);
    }
  Eigen::HouseholderQR<Operator> qr(z);
  Operator q = qr.householderQ() * Operator::Identity(n, n);
  const Operator& r = qr.matrixQR();
  for (Eigen::Index j = 0; j < n; ++j) {
    const double a = std::abs(r(j, j));
    q.col(j) *= a > 0.0 ? r(j, j) / a : cplx(1.0);
  }
  return q;
}

Operator random_unitary(std::size_t dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_unitary(dim, rng);
}

Channel random_channel(std::size_t dim, std::size_t rank, std::mt19937_64& rng,
                       const std::string& in_label,
                       const std::string& out_label) {
  if (rank == 0) throw DimensionError("Kraus rank must be positive");
  const Operator u = random_unitary(dim * rank, rng);
  const auto d = static_cast<Eigen::Index>(dim);
  std::vector<Operator> kraus;
  for (std::size_t k = 0; k < rank; ++k)
    kraus.push_back(u.block(static_cast<Eigen::Index>(k) * d, 0, d, d));
  return make_channel(std::move(kraus), in_label, out_label);
}

Channel random_channel(const Layout& in, const Layout& out, std::size_t rank,
                       std::mt19937_64& rng) {
  const auto din = static_cast<Eigen::Index>(in.total_dim());
  const auto dout = static_cast<Eigen::Index>(out.total_dim());
  const auto r = std::max<Eigen::Index>(static_cast<Eigen::Index>(rank),
                                        (din + dout - 1) / dout);
  const Operator u = random_unitary(static_cast<std::size_t>(dout * r), rng);
  std::vector<Operator> kraus;
  for (Eigen::Index k = 0; k < r; ++k) kraus.push_back(u.block(k * dout, 0, dout, din));
  return make_channel(std::move(kraus), in, out);
}

Channel random_mixed_unitary(std::size_t dim, std::size_t k,
                             std::mt19937_64& rng, const std::string& in_label,
                             const std::string& out_label) {
  if (k == 0) throw DimensionError("need at least one unitary");
  std::exponential_distribution<double> e(1.0);
  std::vector<double> w(k);
  for (auto& x : w) x = e(rng);
  double total = 0.0;
  for (double x : w) total += x;
  std::vector<Operator> kraus;
  for (std::size_t i = 0; i < k; ++i)
    kraus.push_back(std::sqrt(w[i] / total) * random_unitary(dim, rng));
  return make_channel(std::move(kraus), in_label, out_label);
}

CMatrix apply_channel(const Channel& c, const CMatrix& rho) {
  for (const auto& l : rho.layout().labels())
    if (std::find(c.in_labels.begin(), c.in_labels.end(), l) ==
        c.in_labels.end())
      throw LayoutError("state label '" + l + "' is not a channel input");
  if (rho.layout().size() != c.in_labels.size())
    throw LayoutError("state does not cover every channel input");
  return link_product(rho, c.choi);
}

std::vector<Operator> choi_to_kraus(const Channel& c) {
  const EigenDecomposition eig = hermitian_eig(c.choi);
  if (eig.values.size() && eig.values(0) < -tol::kHermiticity)
    throw NumericalError("Choi matrix is not positive semidefinite");
  const Layout in = c.in_layout();
  const Layout out = c.out_layout();
  std::vector<Operator> kraus;
  for (Eigen::Index a = eig.values.size(); a-- > 0;) {
    if (eig.values(a) <= tol::kKrausEig) break;
    const ChoiVector v(c.choi.layout(), std::sqrt(eig.values(a)) *
                                            eig.vectors.col(a));
    kraus.push_back(operator_of(v, in, out));
  }
  return kraus;
}

}  // namespace hoq
