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

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hoq/harness.hpp"

namespace py = pybind11;
using namespace hoq;

namespace {

Layout to_layout(const std::vector<std::pair<std::string, std::size_t>>& subs) {
  std::vector<Subsystem> out;
  for (const auto& [l, d] : subs) out.push_back({l, d});
  return Layout(std::move(out));
}

std::vector<std::pair<std::string, std::size_t>> from_layout(const Layout& l) {
  std::vector<std::pair<std::string, std::size_t>> out;
  for (const auto& s : l.subsystems()) out.emplace_back(s.label, s.dim);
  return out;
}

std::string dump(const io::json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_hoq, m) {
  m.doc() = "Higher-order quantum maps: process matrices, the quantum switch and checks";
  m.attr("__version__") = kVersion;

  py::register_exception<LayoutError>(m, "LayoutError", PyExc_ValueError);
  py::register_exception<DimensionError>(m, "DimensionError", PyExc_ValueError);
  py::register_exception<NumericalError>(m, "NumericalError", PyExc_ValueError);
  py::register_exception<io::SchemaError>(m, "SchemaError", PyExc_ValueError);
  py::register_exception<io::IoError>(m, "IoError", PyExc_OSError);

  py::class_<CMatrix>(m, "CMatrix")
      .def(py::init([](const std::vector<std::pair<std::string, std::size_t>>& layout,
                       const Operator& entries) { return CMatrix(to_layout(layout), entries); }),
           py::arg("layout"), py::arg("entries"))
      .def_property_readonly("layout", [](const CMatrix& c) { return from_layout(c.layout()); })
      .def_property_readonly("matrix", &CMatrix::mat)
      .def_property_readonly("dim", &CMatrix::dim)
      .def("trace", &CMatrix::trace)
      .def("partial_trace", [](const CMatrix& c, const std::vector<std::string>& labels) {
        return partial_trace(c, labels);
      });

  m.def("link_product", &link_product, py::arg("q"), py::arg("r"));
  m.def("frobenius_distance", &frobenius_distance);
  m.def("min_eigenvalue", [](const CMatrix& c) { return min_eigenvalue(c.mat()); });
  m.def("numeric_rank", [](const Operator& a, double tol) { return numeric_rank(a, tol); },
        py::arg("a"), py::arg("rel_tol") = tol::kRank);

  py::class_<Channel>(m, "Channel")
      .def_readonly("choi", &Channel::choi)
      .def_readonly("in_labels", &Channel::in_labels)
      .def_readonly("out_labels", &Channel::out_labels)
      .def_readonly("kraus", &Channel::kraus)
      .def("tp_residual", &Channel::tp_residual)
      .def("cp_residual", &Channel::cp_residual);

  m.def("unitary_channel", [](const Operator& u) { return unitary_channel(u); });
  m.def("mixed_unitary",
        [](const std::vector<double>& p, const std::vector<Operator>& us) {
          return mixed_unitary(p, us);
        });
  m.def("kraus_channel", [](const std::vector<Operator>& k) { return make_channel(k, "A", "B"); });
  m.def("pauli", &pauli);
  m.def("random_unitary",
        [](std::size_t dim, std::uint64_t seed) { return random_unitary(dim, seed); },
        py::arg("dim"), py::arg("seed"));
  m.def("random_channel",
        [](std::size_t dim, std::size_t rank, std::uint64_t seed) {
          std::mt19937_64 rng(seed);
          return random_channel(dim, rank, rng);
        },
        py::arg("dim"), py::arg("rank"), py::arg("seed"));

  py::class_<ProcessMatrix>(m, "ProcessMatrix")
      .def_property_readonly("layout", [](const ProcessMatrix& p) { return from_layout(p.layout()); })
      .def_property_readonly("dim", &ProcessMatrix::dim)
      .def_property_readonly("past", &ProcessMatrix::past)
      .def_property_readonly("future", &ProcessMatrix::future)
      .def_property_readonly("has_dense", &ProcessMatrix::has_dense)
      .def("choi", &ProcessMatrix::choi)
      .def("trace", &ProcessMatrix::trace)
      .def("expected_trace", &ProcessMatrix::expected_trace);

  m.def("switch_process", &switch_process, py::arg("n") = 1);
  m.def("classical_switch", &classical_switch, py::arg("n") = 1);
  m.def("switch_on_unitaries", &switch_on_unitaries);
  m.def("switch_oracle_kraus",
        [](const Channel& a, const Channel& b) { return switch_oracle_kraus(a, b); });
  m.def("supermap_apply",
        [](const ProcessMatrix& s, const std::vector<Channel>& cs) { return supermap_apply(s, cs); });
  m.def("csim_residual",
        [](const Channel& a, const Channel& b) { return csim_residual(a, b); });
  m.def("csim_process", [](int n) { return comb_to_process(csim_comb(n).comb); },
        py::arg("n") = 1);

  m.def("_qccc_check_classical",
        [](int n) { return dump(io::to_json(qccc_check(classical_switch_decomposition(n)))); });
  m.def("_qccc_check_naive",
        [](int n) { return dump(io::to_json(qccc_check(naive_switch_split(n)))); });
  m.def("_set_independence",
        [](std::size_t d, std::size_t mm, std::size_t n, const std::string& which,
           std::uint64_t basis_seed) {
          MatrixSet s = which == "A"   ? MatrixSet::A
                        : which == "B" ? MatrixSet::B
                        : which == "C" ? MatrixSet::C
                        : which == "listing"
                            ? MatrixSet::Listing
                            : throw std::invalid_argument("which must be A, B, C or listing");
          return dump(io::to_json(set_independence_check({d, mm, n, s, basis_seed})));
        });
  m.def("_branch_support", [](std::uint64_t seed) {
    return dump(io::to_json(branch_support_check(seed)));
  });
  m.def("_span_lemma", [](std::size_t dim, std::size_t count, std::uint64_t seed) {
    return dump(io::to_json(span_lemma_check(dim, count, seed)));
  });
  m.def("_qccc_distance",
        [](const ProcessMatrix& t, const std::vector<std::vector<int>>& orders,
           std::size_t max_iters, double tol, std::size_t stride) {
          py::gil_scoped_release release;
          return dump(io::to_json(qccc_distance({t, orders, max_iters, tol, 1.0}), stride));
        });
  m.def("_run_suite",
        [](const std::string& suite, int n, std::uint64_t seed, std::size_t trials,
           unsigned threads, bool timings) {
          SuiteConfig cfg;
          cfg.suite = suite;
          cfg.n = n;
          cfg.seed = seed;
          cfg.trials = trials;
          cfg.threads = threads;
          py::gil_scoped_release release;
          return dump(to_json(run_suite(cfg), timings));
        });
  m.def("_validate_file", [](const std::string& path) { return dump(io::validate_file(path)); });
  m.def("_to_json", [](const ProcessMatrix& p) { return dump(io::to_json(p)); });
  m.def("_process_from_json",
        [](const std::string& s) { return io::process_from_json(io::json::parse(s)); });
}
