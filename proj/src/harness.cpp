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

#include "hoq/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <random>
#include <stdexcept>
#include <thread>

namespace hoq {

namespace {

using io::json;

// Regression constants from the Choi oracle (n = 1).
constexpr double kDephasingResidual = 1.4142135623730954;
constexpr double kSwitchDistance = 1.2741173820520093;

struct Context {
  const SuiteConfig& cfg;
  std::uint64_t seed;
  double tol;
  unsigned threads;
  std::size_t d() const { return std::size_t(1) << cfg.n; }
};

struct Outcome {
  double residual;
  bool verdict;
  json details = json::object();
};

using CheckFn = std::function<Outcome(const Context&)>;

struct Check {
  const char* suite;
  const char* name;
  CheckFn run;
};

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

Channel identity_channel(std::size_t d) {
  return unitary_channel(Operator::Identity(Eigen::Index(d), Eigen::Index(d)));
}

ChoiMatrix closed_form_choi(const Operator& u, const Operator& v) {
  const std::size_t d = std::size_t(u.rows());
  return outer(choi_vector_of(switch_on_unitaries(u, v),
                              Layout{{sw::Pc, 2}, {sw::Pt, d}},
                              Layout{{sw::Fc, 2}, {sw::Ft, d}}));
}

Outcome max_below(double worst, double tol, json details = json::object()) {
  return {worst, worst < tol, std::move(details)};
}

// ---- core ------------------------------------------------------------------

Outcome channel_tp_cp(const Context& c) {
  std::mt19937_64 rng(c.seed);
  double worst = 0.0;
  for (std::size_t t = 0; t < c.cfg.trials; ++t) {
    const Channel ch = random_channel(c.d(), 1 + t % 3, rng);
    worst = std::max({worst, ch.tp_residual(), ch.cp_residual()});
  }
  return max_below(worst, c.tol, {{"trials", c.cfg.trials}});
}

Outcome kraus_roundtrip(const Context& c) {
  std::mt19937_64 rng(c.seed);
  double worst = 0.0;
  for (std::size_t t = 0; t < c.cfg.trials; ++t) {
    const Channel ch = random_channel(c.d(), 1 + t % 4, rng);
    const ChoiMatrix back =
        choi_matrix_of_kraus(choi_to_kraus(ch), ch.in_layout(), ch.out_layout());
    worst = std::max(worst, frobenius_distance(back, ch.choi));
  }
  return max_below(worst, c.tol, {{"trials", c.cfg.trials}});
}

Outcome apply_vs_kraus(const Context& c) {
  std::mt19937_64 rng(c.seed);
  double worst = 0.0;
  const auto d = Eigen::Index(c.d());
  for (std::size_t t = 0; t < c.cfg.trials; ++t) {
    const Channel ch = random_channel(c.d(), 2, rng);
    const CVector psi = random_unitary(c.d(), rng).col(0);
    const CMatrix rho(Layout{{"A", c.d()}}, psi * psi.adjoint());
    Operator want = Operator::Zero(d, d);
    for (const auto& k : ch.kraus) want += k * rho.mat() * k.adjoint();
    worst = std::max(worst, max_abs(apply_channel(ch, rho).mat() - want));
  }
  return max_below(worst, c.tol, {{"trials", c.cfg.trials}});
}

Outcome link_purity_identity(const Context& c) {
  std::mt19937_64 rng(c.seed);
  std::normal_distribution<double> g;
  auto rvec = [&](const Layout& l) {
    CVector v(Eigen::Index(l.total_dim()));
    for (auto& x : v) {
      const double re = g(rng);
      x = cplx(re, g(rng));
    }
    return ChoiVector(l, v);
  };
  double worst = 0.0;
  const std::size_t pairs = 200;
  for (std::size_t t = 0; t < pairs; ++t) {
    const ChoiVector q = rvec(Layout{{"A", 2}, {"X", 2}, {"B", c.d()}});
    const ChoiVector r = rvec(Layout{{"B", c.d()}, {"C", 2}, {"X", 2}});
    const ChoiMatrix lhs = link_product(outer(q), outer(r));
    worst = std::max(worst, frobenius_distance(lhs, outer(link_product_vectors(q, r))));
  }
  return max_below(worst, 1e-10, {{"pairs", pairs}});
}

// ---- switch ----------------------------------------------------------------

Outcome switch_trace(const Context& c) {
  const ProcessMatrix s = switch_process(c.cfg.n);
  const double r = std::abs(s.trace() - s.expected_trace());
  return max_below(r, c.tol, {{"trace", s.trace()}, {"expected", s.expected_trace()}});
}

Outcome switch_closed_form(const Context& c) {
  std::mt19937_64 rng(c.seed);
  const ProcessMatrix s = switch_process(c.cfg.n);
  double worst = 0.0;
  for (std::size_t t = 0; t < c.cfg.trials; ++t) {
    const Operator u = random_unitary(c.d(), rng), v = random_unitary(c.d(), rng);
    const Channel got = supermap_apply(s, {unitary_channel(u), unitary_channel(v)});
    worst = std::max(worst, frobenius_distance(got.choi, closed_form_choi(u, v)));
  }
  return max_below(worst, c.tol, {{"trials", c.cfg.trials}});
}

Outcome switch_kraus_oracle(const Context& c) {
  std::mt19937_64 rng(c.seed);
  const ProcessMatrix s = switch_process(c.cfg.n);
  double worst = 0.0;
  for (std::size_t t = 0; t < c.cfg.trials; ++t) {
    const Channel a = random_channel(c.d(), 2, rng);
    const Channel b = random_channel(c.d(), 2, rng);
    worst = std::max(worst, frobenius_distance(supermap_apply(s, {a, b}).choi,
                                               switch_oracle_kraus(a, b).choi));
  }
  return max_below(worst, c.tol, {{"trials", c.cfg.trials}});
}

Outcome qccc_classical(const Context& c) {
  const ConditionReport r = qccc_check(classical_switch_decomposition(1));
  return {r.max_residual(), r.passed(c.tol), {{"n", 1}, {"conditions", io::to_json(r)}}};
}

Outcome qccc_naive_split(const Context&) {
  const ConditionReport r = qccc_check(naive_switch_split(1));
  return {r.max_residual(), r.max_residual() > 1e-2,
          {{"n", 1}, {"conditions", io::to_json(r)}}};
}

Outcome csim_unitary_equality(const Context& c) {
  std::mt19937_64 rng(c.seed);
  const CsimComb comb = csim_comb(c.cfg.n);
  const std::size_t trials = std::min<std::size_t>(c.cfg.trials, 50);
  double worst = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    const Channel a = unitary_channel(random_unitary(c.d(), rng));
    const Channel b = random_channel(c.d(), 2, rng);
    worst = std::max(worst, csim_residual(comb, a, b));
  }
  return max_below(worst, c.tol, {{"trials", trials}});
}

Outcome csim_dephasing_violation(const Context&) {
  const Channel a = mixed_unitary({0.5, 0.5}, {pauli({0}), pauli({3})});
  const double r = csim_residual(a, identity_channel(2));
  return {r, r > 1e-3,
          {{"n", 1}, {"frozen", kDephasingResidual}, {"frozen_deviation",
                                                       std::abs(r - kDephasingResidual)}}};
}

Outcome csim_violation_scan(const Context& c) {
  const std::size_t d = c.d();
  const ChannelSampler family = [d](std::mt19937_64& rng) {
    return random_mixed_unitary(d, 2, rng);
  };
  const ViolationReport r = violation_scan(family, c.cfg.n, c.cfg.trials, c.seed, c.threads);
  json details = io::to_json(r);
  details.erase("residuals");
  return {r.max, r.max > 0.01, std::move(details)};
}

Outcome csim_single_order(const Context& c) {
  const ProcessMatrix p = comb_to_process(csim_comb(1).comb);
  const ConditionReport r = qccc_check(single_order(p));
  return {r.max_residual(), r.passed(c.tol), {{"n", 1}}};
}

// ---- lemmas ----------------------------------------------------------------

Outcome span_lemma(const Context& c) {
  double worst = 0.0;
  bool ok = true;
  for (std::uint64_t t = 0; t < 20; ++t) {
    const LemmaReport r = span_lemma_check(8, 1 + t % 7, split_seed(c.seed, t));
    worst = std::max(worst, r.residual("a_projection_residual"));
    ok = ok && r.verdict;
  }
  return {worst, ok, {{"dim", 8}, {"seeds", 20}}};
}

Outcome rank_check(const RankCheckSpec& spec, bool assert_full) {
  const LemmaReport r = set_independence_check(spec);
  json details = io::to_json(r);
  return {r.residual("rank_deficit"), assert_full ? r.verdict : true, std::move(details)};
}

Outcome basis_invariance(const Context& c) {
  double worst = 0.0;
  bool ok = true;
  for (std::uint64_t t = 0; t < 10; ++t) {
    const std::uint64_t s = split_seed(c.seed, t) | 1;
    const LemmaReport a = set_independence_check({2, 1, 2, MatrixSet::Listing, s});
    const LemmaReport b = set_independence_check({2, 2, 1, MatrixSet::B, s});
    worst = std::max({worst, a.residual("rank_deficit"), b.residual("rank_deficit")});
    ok = ok && a.verdict && b.verdict;
  }
  return {worst, ok, {{"bases", 10}}};
}

Outcome multilinearity(const ProcessMatrix& s, const std::string& roles, const Context& c) {
  const LemmaReport r = multilinearity_expansion_check(s, roles, 2, 2, c.seed);
  return {r.residual("expansion_residual"), r.residual("expansion_residual") < c.tol,
          io::to_json(r)};
}

Outcome branch_support(const Context& c) {
  const LemmaReport r = branch_support_check(c.seed);
  return {r.residual("rank_mismatches"), r.verdict, io::to_json(r)};
}

// ---- feasibility -----------------------------------------------------------

const std::vector<std::vector<int>> kOrders{{1, 2}, {2, 1}};

Outcome feasibility_member(const ProcessMatrix& t) {
  const FeasibilityResult r = qccc_distance({t, kOrders, 3000, 1e-8, 1.0});
  json details = io::to_json(r, 50);
  details.erase("decomposition");
  return {r.residual, r.residual < 1e-6, std::move(details)};
}

Outcome feasibility_switch(const Context&) {
  const FeasibilityResult r = qccc_distance({switch_process(1), kOrders, 3000, 1e-9, 1.0});
  const bool tail = non_decreasing_tail(r.residual_trace, 0.5, 1e-12);
  json details = io::to_json(r, 50);
  details.erase("decomposition");
  details["frozen"] = kSwitchDistance;
  details["tail_non_decreasing"] = tail;
  return {r.residual, r.residual > kSwitchDistance - 1e-6 && tail, std::move(details)};
}

const std::vector<Check>& registry() {
  static const std::vector<Check> checks{
      {"core", "channel_tp_cp", channel_tp_cp},
      {"core", "kraus_roundtrip", kraus_roundtrip},
      {"core", "apply_channel_kraus", apply_vs_kraus},
      {"core", "link_purity_identity", link_purity_identity},
      {"switch", "switch_trace", switch_trace},
      {"switch", "switch_closed_form", switch_closed_form},
      {"switch", "switch_kraus_oracle", switch_kraus_oracle},
      {"switch", "qccc_classical_switch", qccc_classical},
      {"switch", "qccc_naive_split_fails", qccc_naive_split},
      {"switch", "csim_unitary_equality", csim_unitary_equality},
      {"switch", "csim_dephasing_violation", csim_dephasing_violation},
      {"switch", "csim_violation_scan", csim_violation_scan},
      {"switch", "csim_single_order", csim_single_order},
      {"lemmas", "span_lemma", span_lemma},
      {"lemmas", "listing1_rank",
       [](const Context&) { return rank_check({2, 1, 2, MatrixSet::Listing, 0}, true); }},
      {"lemmas", "set_c_rank",
       [](const Context&) { return rank_check({2, 1, 2, MatrixSet::C, 0}, true); }},
      {"lemmas", "set_b_rank",
       [](const Context&) { return rank_check({2, 2, 1, MatrixSet::B, 0}, true); }},
      {"lemmas", "set_a_rank",
       [](const Context&) { return rank_check({2, 2, 2, MatrixSet::A, 0}, true); }},
      {"lemmas", "set_b_rank_m3_recorded",
       [](const Context&) { return rank_check({2, 3, 1, MatrixSet::B, 0}, false); }},
      {"lemmas", "rank_basis_invariance", basis_invariance},
      {"lemmas", "multilinearity_switch",
       [](const Context& c) { return multilinearity(switch_process(1), "AB", c); }},
      {"lemmas", "multilinearity_csim",
       [](const Context& c) {
         return multilinearity(comb_to_process(csim_comb(1).comb), "ABA", c);
       }},
      {"lemmas", "branch_support", branch_support},
      {"feasibility", "feasibility_classical_switch",
       [](const Context&) { return feasibility_member(classical_switch(1)); }},
      {"feasibility", "feasibility_comb",
       [](const Context& c) {
         std::mt19937_64 rng(c.seed);
         const Comb comb = random_comb(Layout{{"P", 2}}, {{"I1", "O1"}, {"I2", "O2"}},
                                       {2, 2}, Layout{{"F", 2}}, 2, rng);
         return feasibility_member(comb_to_process(comb));
       }},
      {"feasibility", "feasibility_switch", feasibility_switch},
  };
  return checks;
}

const std::vector<std::string> kSuites{"core", "switch", "lemmas", "feasibility", "all"};

}  // namespace

void SuiteConfig::validate() const {
  if (std::find(kSuites.begin(), kSuites.end(), suite) == kSuites.end())
    throw std::invalid_argument("unknown suite '" + suite + "'");
  if (n != 1 && n != 2) throw std::invalid_argument("n must be 1 or 2");
  if (trials == 0) throw std::invalid_argument("trials must be at least 1");
  if (tol && !(*tol > 0.0)) throw std::invalid_argument("tol must be positive");
  if (threads == 0) throw std::invalid_argument("threads must be at least 1");
}

std::vector<std::string> suite_checks(const std::string& suite) {
  std::vector<std::string> out;
  for (const auto& c : registry())
    if (suite == "all" || suite == c.suite) out.push_back(c.name);
  return out;
}

unsigned thread_budget() {
  const char* env = std::getenv("HOQ_THREADS");
  if (env == nullptr) return 1;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v < 1) return 1;
  return unsigned(std::min(v, 256L));
}

SuiteReport run_suite(const SuiteConfig& cfg) {
  cfg.validate();
  std::vector<const Check*> todo;
  for (const auto& c : registry())
    if (cfg.suite == "all" || cfg.suite == c.suite) todo.push_back(&c);

  SuiteReport rep;
  rep.config = cfg;
  rep.checks.resize(todo.size());
  std::vector<std::exception_ptr> errors(todo.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < todo.size();) {
      const Check& chk = *todo[i];
      CheckRecord& rec = rep.checks[i];
      rec.suite = chk.suite;
      rec.name = chk.name;
      const Context ctx{cfg, split_seed(cfg.seed, fnv1a(chk.name)), cfg.tol.value_or(1e-9),
                        cfg.threads};
      const auto t0 = std::chrono::steady_clock::now();
      try {
        Outcome o = chk.run(ctx);
        rec.residual = o.residual;
        rec.verdict = o.verdict;
        rec.details = std::move(o.details);
      } catch (const std::exception& e) {
        rec.verdict = false;
        rec.residual = std::nan("");
        rec.details = {{"error", e.what()}};
      } catch (...) {
        errors[i] = std::current_exception();
      }
      rec.duration =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
  };
  const unsigned pool = std::max(1u, std::min<unsigned>(cfg.threads, unsigned(todo.size())));
  if (pool == 1) {
    worker();
  } else {
    std::vector<std::thread> ts;
    for (unsigned w = 0; w < pool; ++w) ts.emplace_back(worker);
    for (auto& t : ts) t.join();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  rep.passed = std::all_of(rep.checks.begin(), rep.checks.end(),
                           [](const CheckRecord& r) { return r.verdict; });
  return rep;
}

json to_json(const SuiteReport& r, bool durations) {
  json cfg{{"suite", r.config.suite},
           {"n", r.config.n},
           {"seed", r.config.seed},
           {"trials", r.config.trials},
           {"tol", r.config.tol ? json(*r.config.tol) : json(nullptr)}};
  json checks = json::array();
  for (const auto& c : r.checks) {
    json j{{"suite", c.suite},
           {"name", c.name},
           {"residual", std::isnan(c.residual) ? json(nullptr) : json(c.residual)},
           {"verdict", c.verdict},
           {"details", c.details}};
    if (durations) j["duration_s"] = c.duration;
    checks.push_back(std::move(j));
  }
  return {{"version", r.version},
          {"config", std::move(cfg)},
          {"checks", std::move(checks)},
          {"passed", r.passed}};
}

}  // namespace hoq
