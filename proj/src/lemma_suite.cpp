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

#include "hoq/lemma_suite.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace hoq {

double LemmaReport::residual(const std::string& key) const {
  for (const auto& [k, v] : residuals)
    if (k == key) return v;
  throw std::out_of_range("no residual named '" + key + "'");
}

std::string to_string(MatrixSet s) {
  switch (s) {
    case MatrixSet::A: return "set_A";
    case MatrixSet::B: return "set_B";
    case MatrixSet::C: return "set_C";
    case MatrixSet::Listing: return "set_C_listing";
  }
  return "?";
}

namespace {

using Idx = Eigen::Index;

CVector gaussian_vector(Idx n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  CVector v(n);
  for (Idx i = 0; i < n; ++i) {
    const double re = g(rng);
    const double im = g(rng);
    v(i) = cplx(re, im);
  }
  return v;
}

}  // namespace

LemmaReport span_lemma_check(std::size_t dim, std::size_t count,
                             std::uint64_t seed) {
  if (count == 0 || dim == 0) throw DimensionError("need dim, count >= 1");
  std::mt19937_64 rng(seed);
  const Idx n = static_cast<Idx>(dim), m = static_cast<Idx>(count);
  Operator psi(n, m);
  for (Idx i = 0; i < m; ++i) psi.col(i) = gaussian_vector(n, rng);
  const Operator g = psi * psi.adjoint();

  const EigenDecomposition eig = hermitian_eig(g);
  const double top = eig.values.maxCoeff();
  Operator pinv = Operator::Zero(n, n), proj = Operator::Zero(n, n);
  for (Idx a = 0; a < n; ++a) {
    if (eig.values(a) <= tol::kRank * top) continue;
    const CVector v = eig.vectors.col(a);
    pinv += (v * v.adjoint()) / eig.values(a);
    proj += v * v.adjoint();
  }

  // (a) phi in the span, scaled to t = 1 / <phi|G^+|phi>
  CVector phi = psi * gaussian_vector(m, rng);
  const double t = 1.0 / (phi.adjoint() * pinv * phi).value().real();
  phi *= std::sqrt(t);
  const double a_min = min_eigenvalue(g - phi * phi.adjoint());
  const double a_proj = (phi - proj * phi).norm() / phi.norm();

  LemmaReport r;
  r.name = "span";
  r.seed = seed;
  r.parameters = {{"dim", double(dim)}, {"count", double(count)}};
  r.residuals = {{"a_min_eig", a_min}, {"a_projection_residual", a_proj}};
  r.verdict = a_min >= -1e-10 && a_proj < 1e-9;

  // (b) add a unit component orthogonal to the span
  if (proj.trace().real() < double(n) - 0.5) {
    CVector perp = gaussian_vector(n, rng);
    perp -= proj * perp;
    perp.normalize();
    const CVector phi_b = phi + perp;
    const double b_min = min_eigenvalue(g - phi_b * phi_b.adjoint());
    r.residuals.push_back({"b_min_eig", b_min});
    r.verdict = r.verdict && b_min < -1e-6;
  }
  return r;
}

namespace {

// Digit helpers for a register of `k` factors of dimension d.
struct Digits {
  std::size_t d, k;
  std::size_t size() const {
    std::size_t s = 1;
    for (std::size_t i = 0; i < k; ++i) s *= d;
    return s;
  }
  std::size_t encode(const std::vector<std::size_t>& x) const {
    std::size_t idx = 0;
    for (std::size_t v : x) idx = idx * d + v;
    return idx;
  }
  std::vector<std::size_t> decode(std::size_t idx) const {
    std::vector<std::size_t> x(k);
    for (std::size_t i = k; i-- > 0;) {
      x[i] = idx % d;
      idx /= d;
    }
    return x;
  }
};

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

// Assign tuple `vals` (base-d digits of `code`, length `others.size()`) to
// the positions in `others`.
void place(std::vector<std::size_t>& x, const std::vector<std::size_t>& others,
           std::size_t code, std::size_t d) {
  for (std::size_t i = others.size(); i-- > 0;) {
    x[others[i]] = code % d;
    code /= d;
  }
}

std::vector<std::size_t> others_of(std::size_t first, std::size_t count,
                                   std::size_t skip) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < count; ++i)
    if (i != skip) out.push_back(first + i);
  return out;
}

void check_budget(std::size_t rows, std::size_t cols) {
  if (rows * cols > kRankBudget)
    throw DimensionError("stacked matrix " + std::to_string(rows) + " x " +
                         std::to_string(cols) + " exceeds the rank budget");
}

void push_vec(Operator& stack, Idx col, const Operator& m) {
  stack.col(col) = Eigen::Map<const CVector>(m.data(), m.size());
}

// |1>>^{Pt I_i} (x) |alpha>^{other I}; register (Pt, I_1..I_M)
CVector set_b_vector(std::size_t d, std::size_t m, std::size_t i,
                     std::size_t alpha) {
  const Digits reg{d, m + 1};
  CVector u = CVector::Zero(Idx(reg.size()));
  std::vector<std::size_t> x(m + 1);
  place(x, others_of(1, m, i), alpha, d);
  for (std::size_t a = 0; a < d; ++a) {
    x[0] = a;
    x[1 + i] = a;
    u(Idx(reg.encode(x))) = 1.0;
  }
  return u;
}

// |1>>^{Pt I'_k} |1>>^{O' I_i} |alpha>^{other I'} |gamma>^{other I};
// register (Pt, I_1..I_M, I'_1..I'_N, O')
CVector set_a_vector(std::size_t d, std::size_t m, std::size_t n, std::size_t i,
                     std::size_t k, std::size_t alpha, std::size_t gamma) {
  const Digits reg{d, m + n + 2};
  const std::size_t o = m + n + 1;
  CVector u = CVector::Zero(Idx(reg.size()));
  std::vector<std::size_t> x(m + n + 2);
  place(x, others_of(1 + m, n, k), alpha, d);
  place(x, others_of(1, m, i), gamma, d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      x[0] = a;
      x[1 + m + k] = a;
      x[o] = b;
      x[1 + i] = b;
      u(Idx(reg.encode(x))) = 1.0;
    }
  return u;
}

// Permutation matrix exchanging factors p and q of a d-dimensional register.
Operator swap_factors(const Digits& reg, std::size_t p, std::size_t q) {
  const auto n = Idx(reg.size());
  Operator s = Operator::Zero(n, n);
  for (std::size_t c = 0; c < reg.size(); ++c) {
    auto x = reg.decode(c);
    std::swap(x[p], x[q]);
    s(Idx(reg.encode(x)), Idx(c)) = 1.0;
  }
  return s;
}

// Base member of set_C for k = l = 1 on register (O, I'_1..I'_N, O'_1..O'_N).
Operator set_c_base(std::size_t d, std::size_t n, std::size_t alpha,
                    std::size_t beta, std::size_t gamma, std::size_t delta) {
  const Digits reg{d, 2 * n + 1};
  const auto dim = Idx(reg.size());
  const std::size_t y1 = 1, z1 = 1 + n;
  const auto ys = others_of(1, n, 0), zs = others_of(1 + n, n, 0);
  Operator x = Operator::Zero(dim, dim);
  const Digits rest{d, n - 1};
  for (std::size_t r = 0; r < reg.size(); ++r) {
    const auto xr = reg.decode(r);
    std::vector<std::size_t> yr, zr;
    for (auto p : ys) yr.push_back(xr[p]);
    for (auto p : zs) zr.push_back(xr[p]);
    if (rest.encode(yr) != alpha || rest.encode(zr) != gamma) continue;
    for (std::size_t c = 0; c < reg.size(); ++c) {
      const auto xc = reg.decode(c);
      std::vector<std::size_t> yc, zc;
      for (auto p : ys) yc.push_back(xc[p]);
      for (auto p : zs) zc.push_back(xc[p]);
      if (rest.encode(yc) != beta || rest.encode(zc) != delta) continue;
      if (xr[z1] != xc[z1]) continue;
      double v = 0.0;
      if (xr[0] == xr[y1] && xc[0] == xc[y1]) v += 1.0;
      if (xr[0] == xc[0] && xr[y1] == xc[y1]) v -= 1.0 / double(d);
      x(Idx(r), Idx(c)) = v;
    }
  }
  return x;
}

Operator family_a(std::size_t d, std::size_t m, std::size_t n) {
  const std::size_t na = ipow(d, n - 1), ng = ipow(d, m - 1);
  const std::size_t rows = ipow(d, 2 * (m + n + 2));
  const std::size_t cols = ipow(m * n * na * ng, 2);
  check_budget(rows, cols);
  Operator stack(static_cast<Idx>(rows), static_cast<Idx>(cols));
  Idx col = 0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l)
          for (std::size_t al = 0; al < na; ++al)
            for (std::size_t be = 0; be < na; ++be)
              for (std::size_t ga = 0; ga < ng; ++ga)
                for (std::size_t de = 0; de < ng; ++de) {
                  const CVector ket = set_a_vector(d, m, n, i, k, al, ga);
                  const CVector bra = set_a_vector(d, m, n, j, l, be, de);
                  push_vec(stack, col++, ket * bra.adjoint());
                }
  return stack;
}

Operator family_b(std::size_t d, std::size_t m) {
  const std::size_t na = ipow(d, m - 1);
  const std::size_t rows = ipow(d, 2 * (m + 1));
  const std::size_t cols = ipow(m * na, 2);
  check_budget(rows, cols);
  Operator stack(static_cast<Idx>(rows), static_cast<Idx>(cols));
  Idx col = 0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t al = 0; al < na; ++al)
        for (std::size_t be = 0; be < na; ++be) {
          const CVector ket = set_b_vector(d, m, i, al);
          const CVector bra = set_b_vector(d, m, j, be);
          push_vec(stack, col++, ket * bra.adjoint());
        }
  return stack;
}

Operator family_c(std::size_t d, std::size_t n) {
  const std::size_t na = ipow(d, n - 1);
  const Digits reg{d, 2 * n + 1};
  const std::size_t rows = reg.size() * reg.size();
  const std::size_t cols = n * n * ipow(na, 4);
  check_budget(rows, cols);
  // transpositions (1 k) acting jointly on I' and O'
  std::vector<Operator> perm;
  for (std::size_t k = 0; k < n; ++k)
    perm.push_back(swap_factors(reg, 1, 1 + k) * swap_factors(reg, 1 + n, 1 + n + k));
  Operator stack(static_cast<Idx>(rows), static_cast<Idx>(cols));
  Idx col = 0;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l)
      for (std::size_t al = 0; al < na; ++al)
        for (std::size_t be = 0; be < na; ++be)
          for (std::size_t ga = 0; ga < na; ++ga)
            for (std::size_t de = 0; de < na; ++de)
              push_vec(stack, col++,
                       perm[k] * set_c_base(d, n, al, be, ga, de) * perm[l]);
  return stack;
}

// The d = N = 2 rank script, statement for statement.
Operator family_listing() {
  const std::size_t d = 2;
  const Idx dd = 2;
  const Operator eye = Operator::Identity(dd, dd);
  const Operator phi = [&] {
    CVector v = CVector::Zero(dd * dd);
    for (Idx i = 0; i < dd; ++i) v(i * dd + i) = 1.0;
    return Operator(v * v.adjoint());
  }();
  const Operator one = kron(phi, eye);
  const Operator id = kron(kron(Operator(eye / double(d)), eye), eye);
  const Idx di = Idx(ipow(d, d - 1));
  const Operator I = Operator::Identity(di, di);
  // perms([1 2]) lists [2 1] before [1 2]
  const Operator swap = swap_factors(Digits{d, 2}, 0, 1);
  const std::vector<Operator> pp{swap, Operator::Identity(4, 4)};
  const Layout five{{"1", d}, {"2", d}, {"3", d}, {"4", d}, {"5", d}};

  Operator stack(1024, 64);
  Idx pos = 0;
  for (Idx alpha = 0; alpha < di; ++alpha)
    for (Idx beta = 0; beta < di; ++beta)
      for (Idx gamma = 0; gamma < di; ++gamma)
        for (Idx delta = 0; delta < di; ++delta)
          for (std::size_t k = 0; k < pp.size(); ++k)
            for (std::size_t l = 0; l < pp.size(); ++l) {
              const Operator t = kron(kron(Operator(one - id),
                                           Operator(I.col(alpha) * I.row(beta))),
                                      Operator(I.col(gamma) * I.row(delta)));
              const Operator permuted =
                  permute_subsystems(CMatrix(five, t), {"1", "2", "4", "3", "5"})
                      .mat();
              const Operator a = kron(kron(eye, pp[k]), pp[k]) * permuted *
                                 kron(kron(eye, pp[l]), pp[l]);
              push_vec(stack, pos++, a);
            }
  return stack;
}

}  // namespace

Operator set_family_matrix(const RankCheckSpec& spec) {
  if (spec.d < 2) throw DimensionError("d must be at least 2");
  if (spec.M < 1 || spec.N < 1) throw DimensionError("M and N must be >= 1");
  Operator stack;
  switch (spec.which) {
    case MatrixSet::A: stack = family_a(spec.d, spec.M, spec.N); break;
    case MatrixSet::B: stack = family_b(spec.d, spec.M); break;
    case MatrixSet::C: stack = family_c(spec.d, spec.N); break;
    case MatrixSet::Listing:
      if (spec.d != 2 || spec.N != 2)
        throw DimensionError("the listing construction is fixed to d = N = 2");
      stack = family_listing();
      break;
  }
  if (spec.basis_seed != 0) {
    const auto dim = Idx(std::llround(std::sqrt(double(stack.rows()))));
    const Operator u = random_unitary(std::size_t(dim), spec.basis_seed);
    for (Idx c = 0; c < stack.cols(); ++c) {
      const Eigen::Map<const Operator> m(stack.col(c).data(), dim, dim);
      const Operator rotated = u * m * u.adjoint();
      push_vec(stack, c, rotated);
    }
  }
  return stack;
}

LemmaReport set_independence_check(const RankCheckSpec& spec) {
  const Operator stack = set_family_matrix(spec);
  const std::size_t rank = numeric_rank(stack);
  LemmaReport r;
  r.name = spec.which == MatrixSet::C || spec.which == MatrixSet::Listing
               ? "linear_independence2"
               : "linear_independence";
  r.seed = spec.basis_seed;
  r.parameters = {{"d", double(spec.d)},
                  {"M", double(spec.M)},
                  {"N", double(spec.N)},
                  {"rows", double(stack.rows())}};
  r.residuals = {{"rank", double(rank)},
                 {"columns", double(stack.cols())},
                 {"rank_deficit", double(std::size_t(stack.cols()) - rank)}};
  r.verdict = rank == std::size_t(stack.cols());
  return r;
}

LemmaReport multilinearity_expansion_check(const ProcessMatrix& s,
                                           const std::string& roles,
                                           std::size_t k, std::size_t l,
                                           std::uint64_t seed,
                                           double perturbation) {
  if (roles.size() != s.slots().size())
    throw DimensionError("one role per slot is required");
  if (k == 0 || l == 0) throw DimensionError("family sizes must be positive");
  std::mt19937_64 rng(seed);
  std::size_t dim = 0, m_count = 0, n_count = 0;
  for (std::size_t i = 0; i < roles.size(); ++i) {
    if (roles[i] != 'A' && roles[i] != 'B')
      throw DimensionError("roles must be 'A' or 'B'");
    (roles[i] == 'A' ? m_count : n_count)++;
    const std::size_t di = s.layout().dim(s.slots()[i].in);
    if (dim && di != dim) throw DimensionError("slots differ in dimension");
    dim = di;
  }
  std::vector<Operator> ua, ub;
  for (std::size_t i = 0; i < k; ++i) ua.push_back(random_unitary(dim, rng));
  for (std::size_t i = 0; i < l; ++i) ub.push_back(random_unitary(dim, rng));
  const Channel mix_a = mixed_unitary(std::vector<double>(k, 1.0 / double(k)), ua);
  const Channel mix_b = mixed_unitary(std::vector<double>(l, 1.0 / double(l)), ub);

  ProcessMatrix lhs_map = s;
  if (perturbation != 0.0) {
    const auto n = Idx(s.dim());
    Operator h(n, n);
    std::normal_distribution<double> g;
    for (Idx j = 0; j < n; ++j)
      for (Idx i = 0; i < n; ++i) {
        const double re = g(rng);
        const double im = g(rng);
        h(i, j) = cplx(re, im);
      }
    h = h + h.adjoint().eval();
    h /= h.norm();
    lhs_map = ProcessMatrix(CMatrix(s.layout(), s.choi().mat() + perturbation * h),
                            s.past(), s.future(), s.slots());
  }
  std::vector<Channel> mixed;
  for (char c : roles) mixed.push_back(c == 'A' ? mix_a : mix_b);
  const ChoiMatrix lhs = supermap_apply(lhs_map, mixed).choi;

  const std::size_t terms = ipow(k, m_count) * ipow(l, n_count);
  std::optional<ChoiMatrix> rhs;
  for (std::size_t code = 0; code < terms; ++code) {
    std::size_t c = code;
    std::vector<Channel> tuple;
    for (char role : roles) {
      const std::size_t base = role == 'A' ? k : l;
      const Operator& u = role == 'A' ? ua[c % base] : ub[c % base];
      c /= base;
      tuple.push_back(unitary_channel(u));
    }
    const ChoiMatrix term = supermap_apply(s, tuple).choi;
    rhs = rhs ? *rhs + term : term;
  }
  const ChoiMatrix avg = *rhs * cplx(1.0 / double(terms));
  const double res = frobenius_distance(lhs, avg);

  LemmaReport r;
  r.name = "linearity_MN";
  r.seed = seed;
  r.parameters = {{"K", double(k)},
                  {"L", double(l)},
                  {"M", double(m_count)},
                  {"N", double(n_count)},
                  {"terms", double(terms)},
                  {"perturbation", perturbation}};
  r.residuals = {{"expansion_residual", res}};
  r.verdict = res < 1e-9;
  return r;
}

LemmaReport branch_support_check(std::uint64_t seed) {
  const ChoiVector s = switch_vector(1);
  std::vector<ChoiVector> with_a(4);
  for (int u = 0; u < 4; ++u)
    with_a[u] = link_product_vectors(s, choi_vector_of(pauli({u}), sw::AI, sw::AO));
  std::size_t mismatches = 0, distinct = 0, equal = 0;
  double min_det_distinct = 1.0, max_det_equal = 0.0;
  for (int u1 = 0; u1 < 4; ++u1)
    for (int u2 = 0; u2 < 4; ++u2)
      for (int v = 0; v < 4; ++v) {
        const ChoiVector bv = choi_vector_of(pauli({v}), sw::BI, sw::BO);
        const CVector w1 = link_product_vectors(with_a[u1], bv).vec();
        const CVector w2 = link_product_vectors(with_a[u2], bv).vec();
        Operator gram(2, 2);
        gram << w1.dot(w1), w1.dot(w2), w2.dot(w1), w2.dot(w2);
        const std::size_t rank = numeric_rank(gram);
        const double det = std::abs(gram.determinant()) /
                           (gram(0, 0).real() * gram(1, 1).real());
        const std::size_t want = u1 == u2 ? 1 : 2;
        if (rank != want) ++mismatches;
        if (u1 == u2) {
          ++equal;
          max_det_equal = std::max(max_det_equal, det);
        } else {
          ++distinct;
          min_det_distinct = std::min(min_det_distinct, det);
        }
      }
  LemmaReport r;
  r.name = "branch_support";
  r.seed = seed;
  r.parameters = {{"n", 1.0}, {"triples", 64.0}, {"distinct_pairs", double(distinct)},
                  {"equal_pairs", double(equal)}};
  r.residuals = {{"rank_mismatches", double(mismatches)},
                 {"min_normalized_det_distinct", min_det_distinct},
                 {"max_normalized_det_equal", max_det_equal}};
  r.verdict = mismatches == 0;
  return r;
}

}  // namespace hoq
