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
#include <optional>
#include <string>
#include <vector>

#include "hoq/io.hpp"

namespace hoq {

inline constexpr const char* kVersion = "0.1.0";

struct SuiteConfig {
  std::string suite = "all";  // core | switch | lemmas | feasibility | all
  int n = 1;
  std::uint64_t seed = 7;
  std::size_t trials = 100;
  std::optional<double> tol;  // overrides the 1e-9 equality tolerance
  std::string out;
  unsigned threads = 1;

  /// Throws std::invalid_argument on an unknown suite, n outside {1, 2} or
  /// trials == 0.
  void validate() const;
};

struct CheckRecord {
  std::string suite;
  std::string name;
  double residual = 0.0;
  bool verdict = false;
  double duration = 0.0;  // seconds
  io::json details = io::json::object();
};

struct SuiteReport {
  SuiteConfig config;
  std::vector<CheckRecord> checks;
  bool passed = false;
  std::string version = kVersion;
};

/// Names of the checks `suite` runs, in report order.
std::vector<std::string> suite_checks(const std::string& suite);

/// Runs the checks of cfg.suite, up to cfg.threads at a time. Each check
/// seeds itself from split_seed(cfg.seed, hash(name)), so records do not
/// depend on scheduling.
SuiteReport run_suite(const SuiteConfig& cfg);

/// Thread budget from HOQ_THREADS (unset or invalid: 1).
unsigned thread_budget();

/// `durations = false` drops timing fields, leaving only the deterministic
/// record content.
io::json to_json(const SuiteReport& r, bool durations = true);

}  // namespace hoq
