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

#include <stdexcept>
#include <string>

#include "json.hpp"

#include "hoq/feasibility.hpp"
#include "hoq/lemma_suite.hpp"
#include "hoq/switch_lab.hpp"

namespace hoq::io {

using json = nlohmann::json;

/// Schema violation; path() names the offending field, e.g. "$.layout[1].dim".
class SchemaError : public std::runtime_error {
 public:
  SchemaError(std::string path, const std::string& what)
      : std::runtime_error(path + ": " + what), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

/// File could not be read, written or parsed.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json to_json(const Layout& l);
json to_json(const CMatrix& m);
json to_json(const ChoiVector& v);
json to_json(const Channel& c);
json to_json(const ProcessMatrix& p);
json to_json(const ConditionReport& r);
json to_json(const LemmaReport& r);
json to_json(const ViolationReport& r);
/// `stride` > 1 keeps every stride-th trace entry plus the last one.
json to_json(const FeasibilityResult& r, std::size_t stride = 1);

Layout layout_from_json(const json& j, const std::string& path = "$.layout");
CMatrix matrix_from_json(const json& j, const std::string& path = "$");
ChoiVector vector_from_json(const json& j, const std::string& path = "$");
Channel channel_from_json(const json& j, const std::string& path = "$");
ProcessMatrix process_from_json(const json& j, const std::string& path = "$");

enum class Kind { Matrix, Vector, Channel, Process };
/// Classifies a document by its keys and the length of "re".
Kind kind_of(const json& j);
std::string to_string(Kind k);

json read_json(const std::string& path);
void write_json(const std::string& path, const json& j);

/// Loads `path`, checks its schema and reports numerical residuals
/// (hermiticity, PSD, TP/CP for channels, trace and positivity for
/// processes). Throws IoError or SchemaError.
json validate_file(const std::string& path);

}  // namespace hoq::io
