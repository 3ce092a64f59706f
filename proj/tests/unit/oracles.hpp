// Independent reference implementations used only by the tests. These are
// deliberately written as plain index loops over digit tuples so they share no
// code path with the library.
#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;

inline std::vector<int> digits(int index, const std::vector<int>& dims) {
  std::vector<int> out(dims.size());
  for (int k = static_cast<int>(dims.size()) - 1; k >= 0; --k) {
    out[k] = index % dims[k];
    index /= dims[k];
  }
  return out;
}

inline int flat(const std::vector<int>& dig, const std::vector<int>& dims) {
  int idx = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) idx = idx * dims[k] + dig[k];
  return idx;
}

inline Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

// Trace out the factors flagged in `traced`.
inline Mat partial_trace(const Mat& m, const std::vector<int>& dims,
                         const std::vector<bool>& traced) {
  std::vector<int> kd;
  for (std::size_t k = 0; k < dims.size(); ++k)
    if (!traced[k]) kd.push_back(dims[k]);
  int dk = 1;
  for (int d : kd) dk *= d;
  Mat out = Mat::Zero(dk, dk);
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) {
      auto dr = digits(r, dims), dc = digits(c, dims);
      bool diag = true;
      std::vector<int> kr, kc;
      for (std::size_t k = 0; k < dims.size(); ++k) {
        if (traced[k]) {
          if (dr[k] != dc[k]) diag = false;
        } else {
          kr.push_back(dr[k]);
          kc.push_back(dc[k]);
        }
      }
      if (diag) out(flat(kr, kd), flat(kc, kd)) += m(r, c);
    }
  return out;
}

// out[perm-ordered digits] = m[original digits]; new factor k is old perm[k].
inline Mat permute(const Mat& m, const std::vector<int>& dims,
                   const std::vector<int>& perm) {
  std::vector<int> nd;
  for (int p : perm) nd.push_back(dims[p]);
  Mat out(m.rows(), m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) {
      auto dr = digits(r, dims), dc = digits(c, dims);
      std::vector<int> nr, nc;
      for (int p : perm) {
        nr.push_back(dr[p]);
        nc.push_back(dc[p]);
      }
      out(flat(nr, nd), flat(nc, nd)) = m(r, c);
    }
  return out;
}

// sum_i |i> (x) V|i>
inline Eigen::VectorXcd choi_vec(const Mat& v) {
  Eigen::VectorXcd out(v.rows() * v.cols());
  for (int i = 0; i < v.cols(); ++i)
    for (int o = 0; o < v.rows(); ++o) out(i * v.rows() + o) = v(o, i);
  return out;
}

// sum_k K rho K^dagger
inline Mat apply_kraus(const std::vector<Mat>& kraus, const Mat& rho) {
  Mat out = Mat::Zero(kraus.front().rows(), kraus.front().rows());
  for (const auto& k : kraus) out += k * rho * k.adjoint();
  return out;
}

inline Mat random_matrix(int rows, int cols, unsigned seed) {
  std::srand(seed);
  return Mat::Random(rows, cols);
}

inline Mat random_hermitian(int d, unsigned seed) {
  Mat a = random_matrix(d, d, seed);
  return a + a.adjoint();
}

inline Mat random_density(int d, unsigned seed) {
  Mat a = random_matrix(d, d, seed);
  Mat r = a * a.adjoint();
  return r / r.trace();
}

}  // namespace oracle
