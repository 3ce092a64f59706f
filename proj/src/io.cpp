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

#include "hoq/io.hpp"

#include <fstream>

namespace hoq::io {

namespace {

constexpr const char* kOrder = "row-major-bigendian";

void put_entries(json& j, const cplx* data, std::size_t n, std::size_t stride_row,
                 std::size_t cols) {
  json re = json::array(), im = json::array();
  for (std::size_t i = 0; i < n; ++i) {
    // row-major walk over a column-major buffer
    const std::size_t r = i / cols, c = i % cols;
    const cplx z = data[c * stride_row + r];
    re.push_back(z.real());
    im.push_back(z.imag());
  }
  j["re"] = std::move(re);
  j["im"] = std::move(im);
}

const json& field(const json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(path + "." + key, "missing field");
  return *it;
}

std::vector<std::string> strings(const json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path, "expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string())
      throw SchemaError(path + "[" + std::to_string(i) + "]", "expected a string");
    out.push_back(j[i].get<std::string>());
  }
  return out;
}

std::vector<double> numbers(const json& j, const std::string& path, std::size_t n) {
  if (!j.is_array()) throw SchemaError(path, "expected an array of numbers");
  if (j.size() != n)
    throw SchemaError(path, "expected " + std::to_string(n) + " entries, found " +
                                std::to_string(j.size()));
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!j[i].is_number())
      throw SchemaError(path + "[" + std::to_string(i) + "]", "expected a number");
    out[i] = j[i].get<double>();
  }
  return out;
}

void check_order(const json& j, const std::string& path) {
  if (!j.contains("order")) return;
  if (!j["order"].is_string() || j["order"].get<std::string>() != kOrder)
    throw SchemaError(path + ".order", std::string("expected \"") + kOrder + "\"");
}

// Row-major (re, im) of length rows * cols into a column-major operator.
Operator operator_from(const json& j, const std::string& path, std::size_t rows,
                       std::size_t cols) {
  const auto re = numbers(field(j, "re", path), path + ".re", rows * cols);
  const auto im = numbers(field(j, "im", path), path + ".im", rows * cols);
  Operator m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t i = 0; i < rows * cols; ++i)
    m(Eigen::Index(i / cols), Eigen::Index(i % cols)) = cplx(re[i], im[i]);
  return m;
}

json kraus_json(const Operator& k) {
  json j{{"rows", k.rows()}, {"cols", k.cols()}};
  put_entries(j, k.data(), std::size_t(k.size()), std::size_t(k.rows()),
              std::size_t(k.cols()));
  return j;
}

std::size_t positive_int(const json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<long long>() < 1)
    throw SchemaError(path, "expected a positive integer");
  return j.get<std::size_t>();
}

}  // namespace

json to_json(const Layout& l) {
  json a = json::array();
  for (const auto& s : l.subsystems()) a.push_back({{"label", s.label}, {"dim", s.dim}});
  return a;
}

json to_json(const CMatrix& m) {
  json j{{"layout", to_json(m.layout())}};
  const auto d = std::size_t(m.mat().rows());
  put_entries(j, m.mat().data(), d * d, d, d);
  j["order"] = kOrder;
  return j;
}

json to_json(const ChoiVector& v) {
  json j{{"layout", to_json(v.layout())}};
  put_entries(j, v.vec().data(), std::size_t(v.vec().size()), 1, 1);
  j["order"] = kOrder;
  return j;
}

json to_json(const Channel& c) {
  json j = to_json(c.choi);
  j["in_labels"] = c.in_labels;
  j["out_labels"] = c.out_labels;
  if (!c.kraus.empty()) {
    json k = json::array();
    for (const auto& op : c.kraus) k.push_back(kraus_json(op));
    j["kraus"] = std::move(k);
  }
  return j;
}

json to_json(const ProcessMatrix& p) {
  json j = p.has_dense() ? to_json(p.choi()) : to_json(p.pure());
  j["past"] = p.past();
  j["future"] = p.future();
  json slots = json::array();
  for (const auto& s : p.slots()) slots.push_back({{"in", s.in}, {"out", s.out}});
  j["slots"] = std::move(slots);
  return j;
}

json to_json(const ConditionReport& r) {
  json res = json::object();
  for (const auto& c : r.conditions) res[c.name] = c.residual;
  return {{"residuals", res},
          {"min_eigenvalues", r.min_eigenvalues},
          {"max_residual", r.max_residual()},
          {"passed", r.passed()}};
}

json to_json(const LemmaReport& r) {
  json res = json::object();
  for (const auto& [k, v] : r.residuals) res[k] = v;
  return {{"name", r.name},
          {"parameters", r.parameters},
          {"residuals", res},
          {"verdict", r.verdict},
          {"seed", r.seed}};
}

json to_json(const ViolationReport& r) {
  json j{{"max", r.max},         {"median", r.median}, {"argmax", r.argmax},
         {"seed", r.seed},       {"trials", r.trials}, {"residuals", r.residuals}};
  j["argmax_channel"] =
      r.argmax_channel.kraus.empty() && r.argmax_channel.choi.dim() <= 1
          ? json(nullptr)
          : to_json(r.argmax_channel);
  return j;
}

json to_json(const FeasibilityResult& r, std::size_t stride) {
  if (stride == 0) stride = 1;
  auto decimate = [&](const std::vector<double>& v) {
    json a = json::array();
    for (std::size_t i = 0; i < v.size(); ++i)
      if (i % stride == 0 || i + 1 == v.size()) a.push_back(v[i]);
    return a;
  };
  json branches = json::array();
  for (const auto& [order, m] : r.branches) {
    json b = to_json(m);
    b["branch"] = order;
    branches.push_back(std::move(b));
  }
  return {{"residual", r.residual},
          {"affine_residual", r.affine_residual},
          {"iterations", r.iterations},
          {"converged", r.converged},
          {"trace_stride", stride},
          {"residual_trace", decimate(r.residual_trace)},
          {"gap_trace", decimate(r.gap_trace)},
          {"conditions", to_json(r.conditions)},
          {"decomposition", std::move(branches)}};
}

Layout layout_from_json(const json& j, const std::string& path) {
  if (!j.is_array() || j.empty())
    throw SchemaError(path, "expected a non-empty array of subsystems");
  std::vector<Subsystem> subs;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string p = path + "[" + std::to_string(i) + "]";
    const json& l = field(j[i], "label", p);
    if (!l.is_string() || l.get<std::string>().empty())
      throw SchemaError(p + ".label", "expected a non-empty string");
    subs.push_back({l.get<std::string>(), positive_int(field(j[i], "dim", p), p + ".dim")});
  }
  try {
    return Layout(std::move(subs));
  } catch (const LayoutError& e) {
    throw SchemaError(path, e.what());
  }
}

CMatrix matrix_from_json(const json& j, const std::string& path) {
  check_order(j, path);
  Layout l = layout_from_json(field(j, "layout", path), path + ".layout");
  const std::size_t d = l.total_dim();
  return {std::move(l), operator_from(j, path, d, d)};
}

ChoiVector vector_from_json(const json& j, const std::string& path) {
  check_order(j, path);
  Layout l = layout_from_json(field(j, "layout", path), path + ".layout");
  const std::size_t d = l.total_dim();
  const Operator col = operator_from(j, path, d, 1);
  return {std::move(l), CVector(col.col(0))};
}

Channel channel_from_json(const json& j, const std::string& path) {
  CMatrix choi = matrix_from_json(j, path);
  Channel c;
  c.in_labels = strings(field(j, "in_labels", path), path + ".in_labels");
  c.out_labels = strings(field(j, "out_labels", path), path + ".out_labels");
  std::vector<std::string> all = c.in_labels;
  all.insert(all.end(), c.out_labels.begin(), c.out_labels.end());
  if (all.size() != choi.layout().size())
    throw SchemaError(path + ".in_labels", "in_labels and out_labels must cover the layout");
  for (std::size_t i = 0; i < all.size(); ++i)
    if (!choi.layout().contains(all[i]))
      throw SchemaError(path, "label '" + all[i] + "' is not in the layout");
  c.choi = std::move(choi);
  if (j.contains("kraus")) {
    const json& k = j["kraus"];
    const std::string kp = path + ".kraus";
    if (!k.is_array()) throw SchemaError(kp, "expected an array");
    const std::size_t din = c.in_layout().total_dim(), dout = c.out_layout().total_dim();
    for (std::size_t i = 0; i < k.size(); ++i) {
      const std::string p = kp + "[" + std::to_string(i) + "]";
      const std::size_t rows = positive_int(field(k[i], "rows", p), p + ".rows");
      const std::size_t cols = positive_int(field(k[i], "cols", p), p + ".cols");
      if (rows != dout || cols != din)
        throw SchemaError(p, "Kraus shape does not match the channel layouts");
      c.kraus.push_back(operator_from(k[i], p, rows, cols));
    }
  }
  return c;
}

ProcessMatrix process_from_json(const json& j, const std::string& path) {
  auto past = strings(field(j, "past", path), path + ".past");
  auto future = strings(field(j, "future", path), path + ".future");
  const json& sj = field(j, "slots", path);
  if (!sj.is_array()) throw SchemaError(path + ".slots", "expected an array");
  std::vector<Slot> slots;
  for (std::size_t i = 0; i < sj.size(); ++i) {
    const std::string p = path + ".slots[" + std::to_string(i) + "]";
    const json& in = field(sj[i], "in", p);
    const json& out = field(sj[i], "out", p);
    if (!in.is_string()) throw SchemaError(p + ".in", "expected a string");
    if (!out.is_string()) throw SchemaError(p + ".out", "expected a string");
    slots.push_back({in.get<std::string>(), out.get<std::string>()});
  }
  const Layout l = layout_from_json(field(j, "layout", path), path + ".layout");
  const std::size_t d = l.total_dim();
  const json& re = field(j, "re", path);
  try {
    if (re.is_array() && re.size() == d && d * d != d)
      return {vector_from_json(j, path), past, future, slots};
    return {matrix_from_json(j, path), past, future, slots};
  } catch (const LayoutError& e) {
    throw SchemaError(path, e.what());
  }
}

Kind kind_of(const json& j) {
  if (!j.is_object()) throw SchemaError("$", "expected an object");
  if (j.contains("in_labels") || j.contains("out_labels")) return Kind::Channel;
  if (j.contains("past") || j.contains("slots")) return Kind::Process;
  const Layout l = layout_from_json(field(j, "layout", "$"));
  const json& re = field(j, "re", "$");
  if (re.is_array() && re.size() == l.total_dim() && l.total_dim() > 1)
    return Kind::Vector;
  return Kind::Matrix;
}

std::string to_string(Kind k) {
  switch (k) {
    case Kind::Matrix: return "matrix";
    case Kind::Vector: return "vector";
    case Kind::Channel: return "channel";
    case Kind::Process: return "process";
  }
  return "?";
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw IoError("'" + path + "' is not valid JSON: " + e.what());
  }
}

void write_json(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << j.dump(2) << '\n';
  if (!out) throw IoError("write to '" + path + "' failed");
}

json validate_file(const std::string& path) {
  const json j = read_json(path);
  const Kind k = kind_of(j);
  json rep{{"file", path}, {"kind", to_string(k)}};
  switch (k) {
    case Kind::Matrix: {
      const CMatrix m = matrix_from_json(j);
      rep["dim"] = m.dim();
      rep["hermiticity_residual"] = hermiticity_residual(m.mat());
      rep["trace"] = {m.trace().real(), m.trace().imag()};
      if (rep["hermiticity_residual"].get<double>() <= tol::kHermiticity)
        rep["min_eigenvalue"] = min_eigenvalue(m.mat());
      break;
    }
    case Kind::Vector: {
      const ChoiVector v = vector_from_json(j);
      rep["dim"] = v.dim();
      rep["norm"] = v.vec().norm();
      break;
    }
    case Kind::Channel: {
      const Channel c = channel_from_json(j);
      rep["tp_residual"] = c.tp_residual();
      rep["cp_residual"] = c.cp_residual();
      rep["kraus_count"] = c.kraus.size();
      break;
    }
    case Kind::Process: {
      const ProcessMatrix p = process_from_json(j);
      rep["dim"] = p.dim();
      rep["trace"] = p.trace();
      rep["expected_trace"] = p.expected_trace();
      rep["trace_residual"] = std::abs(p.trace() - p.expected_trace());
      if (p.has_dense()) rep["psd_residual"] = p.psd_residual();
      break;
    }
  }
  return rep;
}

}  // namespace hoq::io
