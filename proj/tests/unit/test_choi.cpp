#include <random>

#include "doctest.h"
#include "hoq/channels.hpp"
#include "hoq/choi.hpp"
#include "oracles.hpp"

using namespace hoq;

namespace {

Operator sx() {
  Operator m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}
Operator sz() {
  Operator m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

}  // namespace

TEST_CASE("choi vector of an operator") {
  CVector id = choi_vector_of(Operator(Operator::Identity(2, 2)), "A", "B").vec();
  CHECK(id(0) == cplx(1));
  CHECK(id(1) == cplx(0));
  CHECK(id(2) == cplx(0));
  CHECK(id(3) == cplx(1));
  CVector x = choi_vector_of(sx(), "A", "B").vec();
  CHECK(x(0) == cplx(0));
  CHECK(x(1) == cplx(1));
  CHECK(x(2) == cplx(1));
  CHECK(x(3) == cplx(0));

  Operator v = oracle::random_matrix(3, 2, 8);  // 2 -> 3
  ChoiVector cv = choi_vector_of(v, "A", "B");
  CHECK(cv.layout() == Layout({{"A", 2}, {"B", 3}}));
  CHECK(max_abs(cv.vec() - oracle::choi_vec(v)) == 0.0);
  CHECK(max_abs(operator_of(cv, "A", "B") - v) == 0.0);
}

TEST_CASE("choi matrix of Kraus operators") {
  ChoiMatrix id = choi_matrix_of_kraus({Operator::Identity(2, 2)}, "A", "B");
  CHECK(max_abs(id.mat() - outer(max_entangled("A", "B", 2)).mat()) == 0.0);

  Operator p0 = Operator::Zero(2, 2), p1 = Operator::Zero(2, 2);
  p0(0, 0) = 1;
  p1(1, 1) = 1;
  ChoiMatrix deph = choi_matrix_of_kraus({p0, p1}, "A", "B");
  Operator expect = Operator::Zero(4, 4);
  expect(0, 0) = 1;
  expect(3, 3) = 1;
  CHECK(max_abs(deph.mat() - expect) == 0.0);

  const double s = 1.0 / std::sqrt(2.0);
  ChoiMatrix xz = choi_matrix_of_kraus({s * sx(), s * sz()}, "A", "B");
  Eigen::VectorXcd vx = oracle::choi_vec(s * sx()), vz = oracle::choi_vec(s * sz());
  CHECK(max_abs(xz.mat() - (vx * vx.adjoint() + vz * vz.adjoint())) < 1e-15);
  CHECK(std::abs(xz.trace() - 2.0) < 1e-14);
  CHECK(min_eigenvalue(xz.mat()) > -1e-12);
  CHECK(max_abs(partial_trace(xz, {"B"}).mat() - Operator::Identity(2, 2)) <
        1e-14);

  CHECK_THROWS_AS(choi_matrix_of_kraus({}, "A", "B"), DimensionError);
  CHECK_THROWS_AS(choi_matrix_of_kraus({sx(), Operator::Identity(3, 3)}, "A", "B"),
                  DimensionError);
}

TEST_CASE("link product basics") {
  Operator rho = oracle::random_density(2, 3);
  ChoiMatrix id = outer(max_entangled("A", "B", 2));
  CMatrix out = link_product(id, CMatrix(Layout{{"A", 2}}, rho));
  CHECK(out.layout() == Layout({{"B", 2}}));
  CHECK(max_abs(out.mat() - rho) < 1e-15);

  CMatrix q(Layout{{"A", 2}}, oracle::random_matrix(2, 2, 1));
  CMatrix r(Layout{{"C", 3}}, oracle::random_matrix(3, 3, 2));
  CHECK(max_abs(link_product(q, r).mat() - kron(q, r).mat()) == 0.0);

  ChoiMatrix xc = choi_matrix_of_kraus({sx()}, "A", "B");
  CMatrix xr = link_product(CMatrix(Layout{{"A", 2}}, rho), xc);
  CHECK(max_abs(xr.mat() - sx() * rho * sx()) < 1e-15);

  CMatrix bad(Layout{{"A", 3}}, Operator::Identity(3, 3));
  CHECK_THROWS_AS(link_product(xc, bad), DimensionError);
}

TEST_CASE("link product of vectors") {
  CVector psi = oracle::random_matrix(2, 1, 5);
  ChoiVector out = link_product_vectors(max_entangled("A", "B", 2),
                                        ChoiVector(Layout{{"A", 2}}, psi));
  CHECK(out.layout() == Layout({{"B", 2}}));
  CHECK(max_abs(out.vec() - psi) < 1e-15);

  std::mt19937_64 rng(4);
  Operator u = random_unitary(2, rng), v = random_unitary(2, rng);
  ChoiVector uv = link_product_vectors(choi_vector_of(u, "A", "B"),
                                       choi_vector_of(v, "B", "C"));
  CHECK(max_abs(uv.vec() - oracle::choi_vec(v * u)) < 1e-14);

  ChoiVector e = link_product_vectors(max_entangled("A", "B", 2),
                                      max_entangled("B", "C", 2));
  CHECK(max_abs(e.vec() - max_entangled("A", "C", 2).vec()) == 0.0);

  ChoiVector a(Layout{{"A", 2}}, psi), c(Layout{{"C", 2}}, psi);
  CHECK(max_abs(link_product_vectors(a, c).vec() - kron(a, c).vec()) == 0.0);

  CHECK(max_entangled("A", "B", 2).vec().squaredNorm() == doctest::Approx(2));
  CHECK(max_entangled("A", "B", 4).vec().squaredNorm() == doctest::Approx(4));
}

TEST_CASE("purity identity on random pairs") {
  std::mt19937_64 rng(2026);
  std::normal_distribution<double> g;
  auto rvec = [&](const Layout& l) {
    CVector v(l.total_dim());
    for (auto& x : v) x = cplx(g(rng), g(rng));
    return ChoiVector(l, v);
  };
  double worst = 0.0;
  for (int t = 0; t < 200; ++t) {
    ChoiVector q = rvec(Layout{{"A", 2}, {"X", 2}, {"B", 3}});
    ChoiVector r = rvec(Layout{{"B", 3}, {"C", 2}, {"X", 2}});
    ChoiVector qr = link_product_vectors(q, r);
    ChoiMatrix lhs = link_product(outer(q), outer(r));
    worst = std::max(worst, frobenius_distance(lhs, outer(qr)));
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("link product is bilinear and commutative") {
  CMatrix q1(Layout{{"A", 2}, {"B", 2}}, oracle::random_matrix(4, 4, 1));
  CMatrix q2(Layout{{"A", 2}, {"B", 2}}, oracle::random_matrix(4, 4, 2));
  CMatrix r(Layout{{"B", 2}, {"C", 3}}, oracle::random_matrix(6, 6, 3));
  const cplx a{0.3, -1.2}, b{2.0, 0.5};
  CMatrix lhs = link_product(q1 * a + q2 * b, r);
  CMatrix rhs = link_product(q1, r) * a + link_product(q2, r) * b;
  CHECK(frobenius_distance(lhs, rhs) <= 1e-12 * rhs.mat().norm());

  CMatrix qr = link_product(q1, r), rq = link_product(r, q1);
  CHECK(rq.layout().labels() == std::vector<std::string>{"C", "A"});
  CHECK(frobenius_distance(qr, rq) <= 1e-12 * qr.mat().norm());
}

TEST_CASE("link product matches the defining partial-trace formula") {
  Operator q = oracle::random_matrix(8, 8, 31), r = oracle::random_matrix(12, 12, 32);
  // Q on (A,B,X), R on (X,B,C) with dims A=2,B=2,X=2,C=3
  CMatrix Q(Layout{{"A", 2}, {"B", 2}, {"X", 2}}, q);
  CMatrix R(Layout{{"X", 2}, {"B", 2}, {"C", 3}}, r);
  // oracle on ordering (A, B, X, C)
  Operator qt = oracle::permute(q, {2, 2, 2}, {0, 1, 2});
  // partial transpose of B,X in Q
  Operator qpt(8, 8);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      auto di = oracle::digits(i, {2, 2, 2}), dj = oracle::digits(j, {2, 2, 2});
      std::swap(di[1], dj[1]);
      std::swap(di[2], dj[2]);
      qpt(oracle::flat(di, {2, 2, 2}), oracle::flat(dj, {2, 2, 2})) = qt(i, j);
    }
  Operator rr = oracle::permute(r, {2, 2, 3}, {1, 0, 2});  // (B, X, C)
  Operator big = oracle::kron(qpt, Operator::Identity(3, 3)) *
                 oracle::kron(Operator::Identity(2, 2), rr);
  Operator expect = oracle::partial_trace(big, {2, 2, 2, 3},
                                          {false, true, true, false});
  CMatrix got = link_product(Q, R);
  CHECK(got.layout().labels() == std::vector<std::string>{"A", "C"});
  CHECK(max_abs(got.mat() - expect) < 1e-12);
}

TEST_CASE("Kraus Choi matrices are PSD") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 20; ++t) {
    std::vector<Operator> k;
    for (int i = 0; i < 3; ++i) k.push_back(oracle::random_matrix(3, 2, 50 + 3 * t + i));
    CHECK(min_eigenvalue(choi_matrix_of_kraus(k, "A", "B").mat()) > -1e-10);
  }
}
