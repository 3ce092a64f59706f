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

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "hoq/supermaps.hpp"

namespace hoq {

/// Three-slot fixed-order circuit over control c, target t and an n-qubit
/// ancilla a prepared in |0...0>:
///
///   CSWAP_1(t,a) . A . CSWAP_1(t,a) . B . CSWAP_0(t,a) . A . CSWAP_0(t,a)
///
/// where CSWAP_v swaps t and a when c = v, and the ancilla is discarded at the
/// end. Slots are (first A call, B call, second A call).
struct CsimComb {
  Comb comb;
  int n = 1;
  std::vector<std::string> ancilla_labels;
  std::string routing;
};

CsimComb csim_comb(int n);

/// ||C_sim(A, B, A) - switch_oracle(A, B)||_F on the Choi matrices.
double csim_residual(const Channel& a, const Channel& b);
double csim_residual(const CsimComb& csim, const Channel& a, const Channel& b);

/// Sampler for the first channel of a (A, B) pair; B is drawn separately.
using ChannelSampler = std::function<Channel(std::mt19937_64&)>;

struct ViolationReport {
  double max = 0.0;
  double median = 0.0;
  std::size_t argmax = 0;
  Channel argmax_channel;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::vector<double> residuals;
};

/// Evaluates csim_residual on `trials` pairs (A from `family`, B a random
/// CPTP map of Kraus rank 2). Trial t uses the seed split_seed(seed, t), so
/// the result does not depend on `threads`.
ViolationReport violation_scan(const ChannelSampler& family, int n,
                               std::size_t trials, std::uint64_t seed,
                               unsigned threads = 1);

/// Counter-based seed derivation (splitmix64 of seed + golden * (index + 1)).
std::uint64_t split_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace hoq
