#include <random>

#include "doctest.h"
#include "hoq/supermaps.hpp"
#include "oracles.hpp"

using namespace hoq;

namespace {

Operator proj(int d, int i) {
  Operator p = Operator::Zero(d, d);
  p(i, i) = 1;
  return p;
}

Channel identity_channel(std::size_t d) {
  return unitary_channel(Operator::Identity(Eigen::Index(d), Eigen::Index(d)));
}

}  // namespace

TEST_CASE("single-layer comb is the identity channel") {
  Comb c = identity_comb(2, 0);
  ProcessMatrix p = comb_to_process(c);
  CHECK(max_abs(p.choi().mat() - outer(max_entangled("P", "F", 2)).mat()) == 0.0);
}

TEST_CASE("one-slot identity wiring") {
  Comb c = identity_comb(2, 1);
  ProcessMatrix p = comb_to_process(c);
  CHECK(p.layout().labels() == std::vector<std::string>{"P", "I1", "O1", "F"});
  Channel out = supermap_apply(p, {identity_channel(2)});
  CHECK(max_abs(out.choi.mat() - outer(max_entangled("P", "F", 2)).mat()) < 1e-14);
  CHECK(qccc_check(single_order(p)).passed());

  // the inserted channel is returned unchanged
  std::mt19937_64 rng(3);
  Channel r = random_channel(2, 2, rng);
  Channel got = supermap_apply(p, {r});
  CHECK(max_abs(got.choi.mat() - r.choi.mat()) < 1e-13);
  CHECK(max_abs(supermap_apply(c, {r}).choi.mat() - r.choi.mat()) < 1e-13);
}

TEST_CASE("comb validation") {
  Comb c = identity_comb(2, 2);
  c.layers.pop_back();
  CHECK_THROWS_AS(c.validate(), LayoutError);
  Comb d = identity_comb(2, 1);
  d.layers[1] = d.layers[1].relabel("O1", "X");
  CHECK_THROWS_AS(comb_to_process(d), LayoutError);
}

TEST_CASE("random three-layer combs are normalized process matrices") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 5; ++t) {
    Comb c = random_comb(Layout{{"P", 2}}, {{"I1", "O1"}, {"I2", "O2"}}, {2, 3},
                         Layout{{"F", 2}}, 2, rng);
    ProcessMatrix p = comb_to_process(c);
    CHECK(std::abs(p.trace() - p.expected_trace()) < 1e-9);
    CHECK(p.expected_trace() == doctest::Approx(12.0));
    CHECK(p.psd_residual() < 1e-9);
    ConditionReport rep = qccc_check(single_order(p));
    CHECK(rep.passed());

    // the comb contraction and the process contraction agree
    Channel a = random_channel(2, 2, rng), b = random_channel(Layout{{"x", 3}},
                                                              Layout{{"y", 3}}, 2, rng);
    Channel via_p = supermap_apply(p, {a, b});
    Channel via_c = supermap_apply(c, {a, b});
    CHECK(frobenius_distance(via_p.choi, via_c.choi) < 1e-10);
    CHECK(via_p.tp_residual() < 1e-9);
    CHECK(via_p.cp_residual() < 1e-9);
  }
}

TEST_CASE("switch process normalization") {
  ProcessMatrix s1 = switch_process(1);
  CHECK(s1.dim() == 256);
  CHECK(s1.has_dense());
  CHECK(numeric_rank(s1.choi()) == 1);
  CHECK(std::abs(s1.trace() - 16.0) < 1e-9);
  CHECK(std::abs(s1.choi().trace().real() - 16.0) < 1e-9);
  CHECK(s1.expected_trace() == 16.0);
  ProcessMatrix s2 = switch_process(2);
  CHECK_FALSE(s2.has_dense());
  CHECK(std::abs(s2.trace() - 128.0) < 1e-9);
  CHECK(s2.expected_trace() == 128.0);
}

TEST_CASE("switch with identity channels is the identity") {
  Channel out = supermap_apply(switch_process(1), {identity_channel(2), identity_channel(2)});
  Operator id4 = Operator::Identity(4, 4);
  CHECK(max_abs(out.choi.mat() - oracle::choi_vec(id4) * oracle::choi_vec(id4).adjoint()) <
        1e-14);
}

TEST_CASE("switch on unitaries") {
  CHECK(max_abs(switch_on_unitaries(pauli({0}), pauli({0})) -
                Operator::Identity(4, 4)) == 0.0);
  Operator xz = switch_on_unitaries(pauli({1}), pauli({3}));
  Operator zx = pauli({3}) * pauli({1});
  CHECK(max_abs(xz.topLeftCorner(2, 2) - zx) == 0.0);
  CHECK(max_abs(xz.bottomRightCorner(2, 2) + zx) == 0.0);
  CHECK_THROWS_AS(switch_on_unitaries(2.0 * pauli({1}), pauli({0})), NumericalError);

  std::mt19937_64 rng(77);
  const ProcessMatrix s = switch_process(1);
  for (int t = 0; t < 10; ++t) {
    Operator u = random_unitary(2, rng), v = random_unitary(2, rng);
    Channel got = supermap_apply(s, {unitary_channel(u), unitary_channel(v)});
    Eigen::VectorXcd w = oracle::choi_vec(switch_on_unitaries(u, v));
    CHECK(max_abs(got.choi.mat() - w * w.adjoint()) < 1e-10);
    CHECK(numeric_rank(got.choi, 1e-8) == 1);
  }
}

TEST_CASE("switch Kraus oracle") {
  Channel id = switch_oracle_kraus({pauli({0})}, {pauli({0})});
  CHECK(max_abs(id.choi.mat() - unitary_channel(Operator::Identity(4, 4)).choi.mat()) < 1e-15);

  std::mt19937_64 rng(5);
  Operator u = random_unitary(2, rng), v = random_unitary(2, rng);
  Channel k = switch_oracle_kraus({u}, {v});
  Eigen::VectorXcd w = oracle::choi_vec(switch_on_unitaries(u, v));
  CHECK(max_abs(k.choi.mat() - w * w.adjoint()) < 1e-12);

  Channel deph = make_channel({proj(2, 0), proj(2, 1)}, "A", "B");
  Channel viaS = supermap_apply(switch_process(1), {deph, identity_channel(2)});
  Channel oracle_ch = switch_oracle_kraus(deph, identity_channel(2));
  CHECK(frobenius_distance(viaS.choi, oracle_ch.choi) < 1e-10);
  CHECK(oracle_ch.tp_residual() < 1e-12);

  CHECK_THROWS_AS(switch_oracle_kraus({pauli({0})}, {Operator::Identity(3, 3)}),
                  DimensionError);
}

TEST_CASE("switch on random channels matches the Kraus oracle, n = 1 and 2") {
  std::mt19937_64 rng(9);
  for (int n : {1, 2}) {
    const ProcessMatrix s = switch_process(n);
    const std::size_t d = std::size_t{1} << n;
    for (int t = 0; t < 3; ++t) {
      Channel a = random_channel(d, 2, rng), b = random_channel(d, 3, rng);
      Channel got = supermap_apply(s, {a, b});
      Channel want = switch_oracle_kraus(a, b);
      CHECK(frobenius_distance(got.choi, want.choi) < 1e-10);
    }
  }
}

TEST_CASE("supermap is multilinear") {
  std::mt19937_64 rng(41);
  const ProcessMatrix s = switch_process(1);
  std::vector<Channel> as;
  for (int i = 0; i < 3; ++i) as.push_back(random_channel(2, 2, rng));
  Channel b = random_channel(2, 2, rng);
  const double p[3] = {0.2, 0.5, 0.3};
  ChoiMatrix mix = as[0].choi * cplx(p[0]) + as[1].choi * cplx(p[1]) +
                   as[2].choi * cplx(p[2]);
  Channel am{mix, {"A"}, {"B"}, {}};
  ChoiMatrix lhs = supermap_apply(s, {am, b}).choi;
  ChoiMatrix rhs = supermap_apply(s, {as[0], b}).choi * cplx(p[0]) +
                   supermap_apply(s, {as[1], b}).choi * cplx(p[1]) +
                   supermap_apply(s, {as[2], b}).choi * cplx(p[2]);
  CHECK(frobenius_distance(lhs, rhs) < 1e-10);
}

TEST_CASE("qccc check: classical switch passes") {
  QcccDecomposition d = classical_switch_decomposition(1);
  ConditionReport rep = qccc_check(d);
  CHECK(rep.passed(1e-9));
  CHECK(rep.conditions.size() == 7);  // 2 positivity, 2 trace_F, 2 prefix, norm
  ProcessMatrix cs = classical_switch(1);
  CHECK(std::abs(cs.trace() - 16.0) < 1e-12);
}

TEST_CASE("qccc check: naive cut of the coherent switch fails positivity") {
  ConditionReport rep = qccc_check(naive_switch_split(1));
  // lambda_min of |s0><s0| + (|s0><s1| + |s1><s0|)/2 with <s|s> = d^3:
  // d^3 (1 - sqrt 2) / 2
  const double expect = 8.0 * (1.0 - std::sqrt(2.0)) / 2.0;
  CHECK(rep.min_eigenvalues.at("(1,2)") == doctest::Approx(expect).epsilon(1e-9));
  CHECK(rep.residual("positivity(1,2)") > 1e-2);
  CHECK_FALSE(rep.passed());
}

TEST_CASE("qccc check rejects malformed decompositions") {
  QcccDecomposition d = classical_switch_decomposition(1);
  d.branches.emplace(std::vector<int>{1, 1}, d.branches.begin()->second);
  CHECK_THROWS_AS(qccc_check(d), LayoutError);
}
