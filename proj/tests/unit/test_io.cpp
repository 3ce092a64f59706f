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
#include <filesystem>
#include <fstream>
#include <random>

#include "doctest.h"
#include "hoq/io.hpp"

using namespace hoq;
using io::json;

namespace {

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("hoq_io_" + name)).string();
}

template <class T>
std::string expect_schema_error(const json& j, T loader) {
  try {
    loader(j);
  } catch (const io::SchemaError& e) {
    return e.path();
  }
  return "<no error>";
}

}  // namespace

TEST_CASE("matrix layout and ordering") {
  Operator m(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = cplx(10 * i + j, -j);
  const json j = io::to_json(CMatrix(Layout{{"A", 2}, {"B", 2}}, m));
  CHECK(j["order"] == "row-major-bigendian");
  CHECK(j["re"].size() == 16);
  CHECK(j["re"][1].get<double>() == 1.0);   // (0,1)
  CHECK(j["re"][4].get<double>() == 10.0);  // (1,0)
  CHECK(j["im"][7].get<double>() == -3.0);  // (1,3)
  CHECK(j["layout"][1]["label"] == "B");
}

TEST_CASE("exact round trips") {
  std::mt19937_64 rng(4);
  const Channel c = random_channel(3, 2, rng);
  const json cj = json::parse(io::to_json(c).dump());
  const Channel c2 = io::channel_from_json(cj);
  CHECK((c2.choi.mat().array() == c.choi.mat().array()).all());
  CHECK(c2.choi.layout() == c.choi.layout());
  CHECK(c2.in_labels == c.in_labels);
  REQUIRE(c2.kraus.size() == c.kraus.size());
  for (std::size_t i = 0; i < c.kraus.size(); ++i)
    CHECK((c2.kraus[i].array() == c.kraus[i].array()).all());

  const ProcessMatrix s = switch_process(1);
  const ProcessMatrix s2 = io::process_from_json(json::parse(io::to_json(s).dump()));
  CHECK((s2.choi().mat().array() == s.choi().mat().array()).all());
  CHECK(s2.past() == s.past());
  CHECK(s2.future() == s.future());
  CHECK(s2.slots().size() == 2);
  CHECK(s2.slots()[1].in == s.slots()[1].in);

  // pure-only processes travel as vectors
  const ProcessMatrix big = switch_process(2);
  const ProcessMatrix big2 = io::process_from_json(json::parse(io::to_json(big).dump()));
  CHECK_FALSE(big2.has_dense());
  CHECK((big2.pure().vec().array() == big.pure().vec().array()).all());

  const ChoiVector v = switch_vector(1);
  CHECK((io::vector_from_json(io::to_json(v)).vec().array() == v.vec().array()).all());
}

TEST_CASE("awkward doubles survive the text form") {
  Operator m(1, 1);
  m(0, 0) = cplx(0.1 + 0.2, std::nextafter(1.0, 2.0));
  const CMatrix x(Layout{{"A", 1}}, m);
  const CMatrix y = io::matrix_from_json(json::parse(io::to_json(x).dump()));
  CHECK(y.mat()(0, 0) == m(0, 0));
}

TEST_CASE("schema errors name the field") {
  json j = io::to_json(CMatrix::identity(Layout{{"A", 2}, {"B", 2}}));
  auto load = [](const json& x) { return io::matrix_from_json(x); };

  json bad = j;
  bad["layout"][1]["dim"] = 0;
  CHECK(expect_schema_error(bad, load) == "$.layout[1].dim");
  bad = j;
  bad["layout"][0].erase("label");
  CHECK(expect_schema_error(bad, load) == "$.layout[0].label");
  bad = j;
  bad["re"].erase(0);
  CHECK(expect_schema_error(bad, load) == "$.re");
  bad = j;
  bad["im"][3] = "x";
  CHECK(expect_schema_error(bad, load) == "$.im[3]");
  bad = j;
  bad["order"] = "column-major";
  CHECK(expect_schema_error(bad, load) == "$.order");
  bad = j;
  bad["layout"][1]["label"] = "A";
  CHECK(expect_schema_error(bad, load) == "$.layout");
  bad = j;
  bad.erase("layout");
  CHECK(expect_schema_error(bad, load) == "$.layout");

  json ch = io::to_json(unitary_channel(Operator::Identity(2, 2)));
  ch["in_labels"] = json::array({"Q"});
  CHECK(expect_schema_error(ch, [](const json& x) { return io::channel_from_json(x); }) ==
        "$");
  json pr = io::to_json(switch_process(1));
  pr["slots"][0].erase("out");
  CHECK(expect_schema_error(pr, [](const json& x) { return io::process_from_json(x); }) ==
        "$.slots[0].out");
}

TEST_CASE("kind detection") {
  CHECK(io::kind_of(io::to_json(CMatrix::identity(Layout{{"A", 2}}))) == io::Kind::Matrix);
  CHECK(io::kind_of(io::to_json(max_entangled("A", "B", 2))) == io::Kind::Vector);
  CHECK(io::kind_of(io::to_json(unitary_channel(pauli({1})))) == io::Kind::Channel);
  CHECK(io::kind_of(io::to_json(switch_process(1))) == io::Kind::Process);
}

TEST_CASE("file validation") {
  std::mt19937_64 rng(6);
  const std::string p = temp_path("channel.json");
  io::write_json(p, io::to_json(random_channel(2, 3, rng)));
  const json rep = io::validate_file(p);
  CHECK(rep["kind"] == "channel");
  CHECK(rep["tp_residual"].get<double>() < 1e-12);
  CHECK(rep["cp_residual"].get<double>() < 1e-12);
  std::remove(p.c_str());

  const std::string q = temp_path("switch.json");
  io::write_json(q, io::to_json(switch_process(1)));
  const json r2 = io::validate_file(q);
  CHECK(r2["trace_residual"].get<double>() < 1e-9);
  std::remove(q.c_str());

  CHECK_THROWS_AS(io::validate_file(temp_path("missing.json")), io::IoError);
  const std::string g = temp_path("garbage.json");
  { std::ofstream(g) << "{not json"; }
  CHECK_THROWS_AS(io::validate_file(g), io::IoError);
  std::remove(g.c_str());
}

TEST_CASE("report serialization") {
  LemmaReport r = branch_support_check(0);
  const json j = io::to_json(r);
  CHECK(j["name"] == "branch_support");
  CHECK(j["verdict"] == true);
  CHECK(j["residuals"]["rank_mismatches"] == 0.0);
  const json c = io::to_json(qccc_check(classical_switch_decomposition(1)));
  CHECK(c["passed"] == true);
  CHECK(c["residuals"].contains("normalization"));
}
