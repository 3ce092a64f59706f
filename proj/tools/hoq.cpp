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

#include <cstdio>
#include <iostream>

#include "CLI11.hpp"
#include "hoq/harness.hpp"

namespace {

enum Exit { kPass = 0, kFail = 1, kUsage = 2, kIo = 3 };

int run(const hoq::SuiteConfig& cfg, bool timings) {
  hoq::SuiteReport rep;
  try {
    rep = hoq::run_suite(cfg);
  } catch (const std::invalid_argument& e) {
    std::cerr << "hoq: " << e.what() << '\n';
    return kUsage;
  }
  for (const auto& c : rep.checks)
    std::printf("%-4s %-30s residual=%.6e  (%.2fs)\n", c.verdict ? "PASS" : "FAIL",
                c.name.c_str(), c.residual, c.duration);
  std::printf("%s: %zu checks, suite %s\n", rep.passed ? "PASS" : "FAIL",
              rep.checks.size(), cfg.suite.c_str());
  if (!cfg.out.empty()) {
    try {
      hoq::io::write_json(cfg.out, hoq::to_json(rep, timings));
    } catch (const hoq::io::IoError& e) {
      std::cerr << "hoq: " << e.what() << '\n';
      return kIo;
    }
  }
  return rep.passed ? kPass : kFail;
}

int validate(const std::string& path) {
  try {
    std::cout << hoq::io::validate_file(path).dump(2) << '\n';
  } catch (const hoq::io::IoError& e) {
    std::cerr << "hoq: " << e.what() << '\n';
    return kIo;
  } catch (const hoq::io::SchemaError& e) {
    std::cerr << "hoq: schema error at " << e.what() << '\n';
    return kFail;
  } catch (const std::invalid_argument& e) {
    std::cerr << "hoq: " << e.what() << '\n';
    return kFail;
  }
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Higher-order quantum map verification harness"};
  app.set_version_flag("--version", std::string(hoq::kVersion));
  app.require_subcommand(1);

  hoq::SuiteConfig cfg;
  bool no_timings = false;
  double tol = 0.0;
  auto* run_cmd = app.add_subcommand("run", "Run a verification suite");
  run_cmd->add_option("--suite", cfg.suite, "core | switch | lemmas | feasibility | all")
      ->check(CLI::IsMember({"core", "switch", "lemmas", "feasibility", "all"}));
  run_cmd->add_option("--n", cfg.n, "Qubits per slot (1 or 2)")->check(CLI::Range(1, 2));
  run_cmd->add_option("--seed", cfg.seed, "Root seed");
  run_cmd->add_option("--trials", cfg.trials, "Trials for randomized checks")
      ->check(CLI::PositiveNumber);
  auto* tol_opt = run_cmd->add_option("--tol", tol, "Equality tolerance override")
                      ->check(CLI::PositiveNumber);
  run_cmd->add_option("--out", cfg.out, "Report path (JSON)");
  run_cmd->add_flag("--no-timings", no_timings, "Omit durations from the report");

  std::string file;
  auto* io_cmd = app.add_subcommand("io", "Matrix and channel files");
  io_cmd->require_subcommand(1);
  auto* val_cmd = io_cmd->add_subcommand("validate", "Check a JSON file");
  val_cmd->add_option("file", file, "Path to a matrix, channel or process")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }
  if (*run_cmd) {
    if (*tol_opt) cfg.tol = tol;
    cfg.threads = hoq::thread_budget();
    return run(cfg, !no_timings);
  }
  return validate(file);
}
