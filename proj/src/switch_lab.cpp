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

#include "hoq/switch_lab.hpp"

#include <algorithm>
#include <exception>
#include <mutex>
#include <thread>

namespace hoq {

namespace {

using Idx = Eigen::Index;

// Basis map on (t, c, a) registers: (t, c, a) -> (t, c, a) with t and a
// exchanged when c == swap_on. Register order is (t, c, a) on both sides.
Operator cswap(Idx d, int swap_on) {
  Operator w = Operator::Zero(2 * d * d, 2 * d * d);
  for (Idx t = 0; t < d; ++t)
    for (Idx c = 0; c < 2; ++c)
      for (Idx a = 0; a < d; ++a) {
        const bool s = c == swap_on;
        const Idx to = ((s ? a : t) * 2 + c) * d + (s ? t : a);
        w(to, (t * 2 + c) * d + a) = 1.0;
      }
  return w;
}

}  // namespace

CsimComb csim_comb(int n) {
  if (n < 1 || n > 4) throw DimensionError("csim supports 1 <= n <= 4");
  const std::size_t du = std::size_t{1} << n;
  const Idx d = static_cast<Idx>(du);
  CsimComb out;
  out.n = n;
  out.ancilla_labels = {"a1", "a2", "a3"};
  out.routing =
      "cswap[c=1] A cswap[c=1] B cswap[c=0] A cswap[c=0] trace(a)";
  Comb& c = out.comb;
  c.past = {sw::Pc, sw::Pt};
  c.future = {sw::Fc, sw::Ft};
  c.slots = {{"I1", "O1"}, {"I2", "O2"}, {"I3", "O3"}};

  auto regs = [&](const std::string& t, const std::string& cc,
                  const std::string& a) {
    return Layout{{t, du}, {cc, 2}, {a, du}};
  };

  // V0: |c, t> -> cswap[c=1] |t, c, 0>
  Operator prep = Operator::Zero(2 * d * d, 2 * d);
  for (Idx cc = 0; cc < 2; ++cc)
    for (Idx t = 0; t < d; ++t) prep((t * 2 + cc) * d + 0, cc * d + t) = 1.0;
  c.layers.push_back(make_channel({cswap(d, 1) * prep},
                                  Layout{{sw::Pc, 2}, {sw::Pt, du}},
                                  regs("I1", "c1", "a1")));
  c.layers.push_back(
      make_channel({cswap(d, 1)}, regs("O1", "c1", "a1"), regs("I2", "c2", "a2")));
  c.layers.push_back(
      make_channel({cswap(d, 0)}, regs("O2", "c2", "a2"), regs("I3", "c3", "a3")));

  // V3: cswap[c=0], then <j|_a; output order (Fc, Ft)
  const Operator last = cswap(d, 0);
  std::vector<Operator> kraus;
  for (Idx j = 0; j < d; ++j) {
    Operator k = Operator::Zero(2 * d, 2 * d * d);
    for (Idx t = 0; t < d; ++t)
      for (Idx cc = 0; cc < 2; ++cc)
        k.row(cc * d + t) = last.row((t * 2 + cc) * d + j);
    kraus.push_back(std::move(k));
  }
  c.layers.push_back(make_channel(std::move(kraus), regs("O3", "c3", "a3"),
                                  Layout{{sw::Fc, 2}, {sw::Ft, du}}));
  c.validate();
  return out;
}

double csim_residual(const CsimComb& csim, const Channel& a, const Channel& b) {
  const std::size_t d = std::size_t{1} << csim.n;
  if (a.in_layout().total_dim() != d || b.in_layout().total_dim() != d)
    throw DimensionError("channels do not match the circuit width");
  const Channel sim = supermap_apply(csim.comb, {a, b, a});
  const Channel ref = switch_oracle_kraus(a, b);
  return frobenius_distance(sim.choi, ref.choi);
}

double csim_residual(const Channel& a, const Channel& b) {
  const std::size_t d = a.in_layout().total_dim();
  int n = 0;
  while ((std::size_t{1} << n) < d) ++n;
  if ((std::size_t{1} << n) != d || n < 1)
    throw DimensionError("channel width is not a qubit register");
  return csim_residual(csim_comb(n), a, b);
}

std::uint64_t split_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

ViolationReport violation_scan(const ChannelSampler& family, int n,
                               std::size_t trials, std::uint64_t seed,
                               unsigned threads) {
  if (trials == 0) throw DimensionError("trials must be positive");
  const CsimComb csim = csim_comb(n);
  const std::size_t d = std::size_t{1} << n;
  std::vector<double> res(trials);
  std::vector<Channel> as(trials);
  auto work = [&](std::size_t t) {
    std::mt19937_64 rng(split_seed(seed, t));
    as[t] = family(rng);
    const Channel b = random_channel(d, 2, rng);
    res[t] = csim_residual(csim, as[t], b);
  };
  threads = std::max(1u, std::min<unsigned>(threads, unsigned(trials)));
  if (threads == 1) {
    for (std::size_t t = 0; t < trials; ++t) work(t);
  } else {
    std::exception_ptr err;
    std::mutex mu;
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w)
      pool.emplace_back([&, w] {
        try {
          for (std::size_t t = w; t < trials; t += threads) work(t);
        } catch (...) {
          std::lock_guard<std::mutex> lock(mu);
          if (!err) err = std::current_exception();
        }
      });
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
  }
  ViolationReport r;
  r.seed = seed;
  r.trials = trials;
  r.residuals = res;
  r.argmax = static_cast<std::size_t>(
      std::max_element(res.begin(), res.end()) - res.begin());
  r.max = res[r.argmax];
  r.argmax_channel = as[r.argmax];
  std::vector<double> sorted = res;
  std::sort(sorted.begin(), sorted.end());
  const std::size_t m = trials / 2;
  r.median = trials % 2 ? sorted[m] : 0.5 * (sorted[m - 1] + sorted[m]);
  return r;
}

}  // namespace hoq
