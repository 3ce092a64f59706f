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

#include "doctest.h"
#include "hoq/lemma_suite.hpp"
#include "hoq/switch_lab.hpp"
#include "oracles.hpp"

using namespace hoq;

TEST_CASE("span lemma on random families") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    LemmaReport r = span_lemma_check(8, 1 + seed % 7, seed);
    CHECK(r.verdict);
    CHECK(r.residual("a_min_eig") >= -1e-10);
    CHECK(r.residual("a_projection_residual") < 1e-9);
    CHECK(r.residual("b_min_eig") < -1e-6);
  }
  // full span: no orthogonal direction exists
  LemmaReport full = span_lemma_check(4, 4, 3);
  CHECK(full.verdict);
  CHECK_THROWS(full.residual("b_min_eig"));
  CHECK_THROWS_AS(span_lemma_check(4, 0, 1), DimensionError);
}

TEST_CASE("span lemma contrapositive matches a direct eigensolve") {
  // phi orthogonal to every psi_i: <phi|G - phi phi^dag|phi> = -|phi|^4
  Operator psi = Operator::Zero(3, 2);
  psi(0, 0) = 1.0;
  psi(1, 1) = 1.0;
  CVector phi = CVector::Zero(3);
  phi(2) = 2.0;
  const Operator g = psi * psi.adjoint() - phi * phi.adjoint();
  CHECK(min_eigenvalue(g) == doctest::Approx(-4.0));
}

TEST_CASE("listing construction has full column rank") {
  LemmaReport r = set_independence_check({2, 1, 2, MatrixSet::Listing, 0});
  CHECK(r.verdict);
  CHECK(r.residual("columns") == 64);
  CHECK(r.residual("rank") == 64);
  // same construction order twice gives bit-identical stacks
  CHECK(set_family_matrix({2, 1, 2, MatrixSet::Listing, 0}) ==
        set_family_matrix({2, 1, 2, MatrixSet::Listing, 0}));
}

TEST_CASE("displayed set_C family spans the listing family") {
  const Operator a = set_family_matrix({2, 1, 2, MatrixSet::C, 0});
  const Operator b = set_family_matrix({2, 1, 2, MatrixSet::Listing, 0});
  CHECK(a.cols() == 64);
  Operator both(a.rows(), a.cols() + b.cols());
  both << a, b;
  CHECK(numeric_rank(both) == 64);
  CHECK(numeric_rank(a) == 64);
}

TEST_CASE("set_C member is traceless on O I'_1 and fixed by the k=l=1 pair") {
  // every base element has Tr over (O, I'_1) of the first factor equal to 0
  const Operator a = set_family_matrix({2, 1, 2, MatrixSet::C, 0});
  const Eigen::Map<const Operator> x(a.col(0).data(), 32, 32);
  const CMatrix m(Layout{{"O", 2}, {"Y1", 2}, {"Y2", 2}, {"Z1", 2}, {"Z2", 2}},
                  Operator(x));
  CHECK(max_abs(partial_trace(m, {"O", "Y1"}).mat()) < 1e-14);
}

TEST_CASE("set_A and set_B independence") {
  LemmaReport b = set_independence_check({2, 2, 1, MatrixSet::B, 0});
  CHECK(b.verdict);
  CHECK(b.residual("columns") == 16);

  LemmaReport a = set_independence_check({2, 2, 2, MatrixSet::A, 0});
  CHECK(a.verdict);
  CHECK(a.residual("columns") == 256);
  CHECK(a.residual("rank") == 256);

  CHECK(set_independence_check({3, 2, 1, MatrixSet::B, 0}).verdict);
  CHECK(set_independence_check({3, 1, 1, MatrixSet::C, 0}).verdict);
  CHECK_THROWS_AS(set_independence_check({3, 2, 2, MatrixSet::C, 0}), DimensionError);
}

TEST_CASE("set_B outside the hypothesis is recorded") {
  LemmaReport r = set_independence_check({2, 3, 1, MatrixSet::B, 0});
  MESSAGE("set_B d=2 M=3: rank " << r.residual("rank") << " of "
                                 << r.residual("columns"));
  CHECK(r.residual("columns") == 144);
}

TEST_CASE("set_B columns match an explicit construction") {
  // d=2, M=1: u = |00> + |11>, a single column vec(u u^dag)
  const Operator s = set_family_matrix({2, 1, 1, MatrixSet::B, 0});
  CHECK(s.cols() == 1);
  CVector u = CVector::Zero(4);
  u(0) = u(3) = 1.0;
  const Operator m = u * u.adjoint();
  CHECK(max_abs(s.col(0) - Eigen::Map<const CVector>(m.data(), 16)) == 0.0);
}

TEST_CASE("independence verdicts survive a change of basis") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    CHECK(set_independence_check({2, 1, 2, MatrixSet::Listing, seed}).verdict);
    CHECK(set_independence_check({2, 2, 1, MatrixSet::B, seed}).verdict);
    CHECK(set_independence_check({2, 3, 1, MatrixSet::B, seed}).residual("rank") ==
          set_independence_check({2, 3, 1, MatrixSet::B, 0}).residual("rank"));
  }
}

TEST_CASE("invalid rank specs") {
  CHECK_THROWS_AS(set_family_matrix({1, 1, 1, MatrixSet::B, 0}), DimensionError);
  CHECK_THROWS_AS(set_family_matrix({2, 0, 1, MatrixSet::B, 0}), DimensionError);
  CHECK_THROWS_AS(set_family_matrix({3, 1, 2, MatrixSet::Listing, 0}),
                  DimensionError);
  CHECK_THROWS_AS(set_family_matrix({2, 1, 3, MatrixSet::C, 0}), DimensionError);
}

TEST_CASE("multilinearity expansion on the switch") {
  const ProcessMatrix s = switch_process(1);
  CHECK(multilinearity_expansion_check(s, "AB", 1, 1, 1).verdict);
  LemmaReport r = multilinearity_expansion_check(s, "AB", 2, 1, 2);
  CHECK(r.verdict);
  CHECK(r.parameters.at("terms") == 2);
  CHECK(multilinearity_expansion_check(s, "AB", 3, 2, 3).verdict);
}

TEST_CASE("switch expansion with I and X equals the two-term average") {
  const ProcessMatrix s = switch_process(1);
  const Channel mix = mixed_unitary({0.5, 0.5}, {pauli({0}), pauli({1})});
  const Channel b = unitary_channel(pauli({2}));
  const ChoiMatrix lhs = supermap_apply(s, {mix, b}).choi;
  const ChoiMatrix t0 = supermap_apply(s, {unitary_channel(pauli({0})), b}).choi;
  const ChoiMatrix t1 = supermap_apply(s, {unitary_channel(pauli({1})), b}).choi;
  CHECK(frobenius_distance(lhs, (t0 + t1) * cplx(0.5)) < 1e-12);
}

TEST_CASE("multilinearity expansion on the csim comb") {
  const ProcessMatrix c = comb_to_process(csim_comb(1).comb);
  LemmaReport r = multilinearity_expansion_check(c, "ABA", 2, 2, 4);
  CHECK(r.verdict);
  CHECK(r.parameters.at("terms") == 8);
  CHECK(r.residual("expansion_residual") < 1e-9);
}

TEST_CASE("perturbation residual scales linearly") {
  const ProcessMatrix s = switch_process(1);
  const double r3 =
      multilinearity_expansion_check(s, "AB", 3, 2, 5, 1e-3).residual("expansion_residual");
  const double r4 =
      multilinearity_expansion_check(s, "AB", 3, 2, 5, 1e-4).residual("expansion_residual");
  CHECK(r3 > 1e-9);
  CHECK(r3 / r4 == doctest::Approx(10.0).epsilon(1e-6));
}

TEST_CASE("branch support rank pattern") {
  LemmaReport r = branch_support_check(0);
  CHECK(r.verdict);
  CHECK(r.residual("rank_mismatches") == 0);
  CHECK(r.residual("min_normalized_det_distinct") > 0.1);
  CHECK(r.residual("max_normalized_det_equal") < 1e-12);
  CHECK(r.parameters.at("distinct_pairs") == 48);
}

TEST_CASE("branch support spot checks") {
  const ChoiVector s = switch_vector(1);
  auto w = [&](int u, int v) {
    ChoiVector x = link_product_vectors(s, choi_vector_of(pauli({u}), sw::AI, sw::AO));
    return link_product_vectors(x, choi_vector_of(pauli({v}), sw::BI, sw::BO)).vec();
  };
  Operator pair(w(0, 0).size(), 2);
  pair << w(0, 0), w(1, 0);
  CHECK(numeric_rank(pair) == 2);
  pair << w(3, 2), w(3, 2);
  CHECK(numeric_rank(pair) == 1);
}
