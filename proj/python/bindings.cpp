// Copyright 2026 The reglab Authors
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


#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "reglab/constructions.hpp"
#include "reglab/embedding.hpp"
#include "reglab/errors.hpp"
#include "reglab/graph_io.hpp"
#include "reglab/hamiltonicity.hpp"
#include "reglab/regularity.hpp"
#include "reglab/robust_expansion.hpp"
#include "reglab/szemeredi.hpp"

namespace py = pybind11;
using namespace reglab;

namespace {

// Rationals cross the boundary as fractions.Fraction; ints and "p/q" strings
// are accepted on input.
Rational to_rational(const py::object& o) { return Rational::parse(py::str(o).cast<std::string>()); }

py::object to_fraction(const Rational& r) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(r.num(), r.den());
}

VertexSet to_set(int n, const std::vector<int>& v) {
  for (int x : v)
    if (x < 0 || x >= n) throw DomainError("vertex out of range");
  return VertexSet(n, v);
}

template <typename G>
py::dict pair_check(const G& g, const std::vector<int>& a, const std::vector<int>& b, const py::object& eps,
                    const py::object& d, bool super, int cap) {
  PairSpec spec{to_set(g.n(), a), to_set(g.n(), b), to_rational(eps), to_rational(d)};
  CheckOptions opt;
  opt.cap = cap;
  RegularityVerdict v = super ? check_pair_superregular(g, spec, opt) : check_pair_regular(g, spec, opt);
  py::dict out;
  out["holds"] = v.holds;
  out["exhaustive"] = v.exhaustive;
  if (v.witness) {
    out["x"] = v.witness->x.members();
    out["y"] = v.witness->y.members();
    out["value"] = to_fraction(v.witness->deviation);
  }
  return out;
}

py::object cycle_or_none(const std::optional<HamCycle>& h) {
  if (!h) return py::none();
  return py::cast(h->order);
}

}  // namespace

PYBIND11_MODULE(_reglab, m) {
  m.doc() = "Exact regularity, embedding and Hamiltonicity checks on small graphs.";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<Infeasible>(m, "Infeasible", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init<int>())
      .def(py::init<int, const std::vector<std::pair<int, int>>&>())
      .def_property_readonly("n", &Graph::n)
      .def("add_edge", &Graph::add_edge)
      .def("remove_edge", &Graph::remove_edge)
      .def("has_edge", &Graph::has_edge)
      .def("degree", &Graph::degree)
      .def("edge_count", &Graph::edge_count)
      .def("min_degree", &Graph::min_degree)
      .def("edges", &Graph::edges)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.n()) + ", edges=" + std::to_string(g.edge_count()) + ")";
      });

  py::class_<Digraph>(m, "Digraph")
      .def(py::init<int>())
      .def(py::init<int, const std::vector<std::pair<int, int>>&>())
      .def_property_readonly("n", &Digraph::n)
      .def("add_edge", &Digraph::add_edge)
      .def("remove_edge", &Digraph::remove_edge)
      .def("has_edge", &Digraph::has_edge)
      .def("out_degree", &Digraph::out_degree)
      .def("in_degree", &Digraph::in_degree)
      .def("edge_count", &Digraph::edge_count)
      .def("min_semidegree", &Digraph::min_semidegree)
      .def("edges", &Digraph::edges)
      .def("__eq__", [](const Digraph& a, const Digraph& b) { return a == b; })
      .def("__repr__", [](const Digraph& g) {
        return "Digraph(n=" + std::to_string(g.n()) + ", arcs=" + std::to_string(g.edge_count()) + ")";
      });

  m.def("parse_graph", &parse_graph_text, py::arg("text"));
  m.def("format_graph", py::overload_cast<const Graph&>(&format_graph));
  m.def("format_graph", py::overload_cast<const Digraph&>(&format_graph));

  m.def("density", [](const Graph& g, const std::vector<int>& a, const std::vector<int>& b) {
    return to_fraction(density(g, to_set(g.n(), a), to_set(g.n(), b)));
  });
  m.def("density", [](const Digraph& g, const std::vector<int>& a, const std::vector<int>& b) {
    return to_fraction(density(g, to_set(g.n(), a), to_set(g.n(), b)));
  });

  m.def(
      "check_pair_regular",
      [](const Graph& g, const std::vector<int>& a, const std::vector<int>& b, const py::object& eps, int cap) {
        return pair_check(g, a, b, eps, py::int_(0), false, cap);
      },
      py::arg("g"), py::arg("a"), py::arg("b"), py::arg("eps"), py::arg("cap") = 14);
  m.def(
      "check_pair_regular",
      [](const Digraph& g, const std::vector<int>& a, const std::vector<int>& b, const py::object& eps, int cap) {
        return pair_check(g, a, b, eps, py::int_(0), false, cap);
      },
      py::arg("g"), py::arg("a"), py::arg("b"), py::arg("eps"), py::arg("cap") = 14);
  m.def(
      "check_pair_superregular",
      [](const Graph& g, const std::vector<int>& a, const std::vector<int>& b, const py::object& eps,
         const py::object& d, int cap) { return pair_check(g, a, b, eps, d, true, cap); },
      py::arg("g"), py::arg("a"), py::arg("b"), py::arg("eps"), py::arg("d"), py::arg("cap") = 14);

  m.def(
      "regularity_partition",
      [](const Graph& g, const py::object& eps, int k0, std::uint64_t seed) {
        PartitionOptions opt;
        opt.seed = seed;
        RegularityRun run = regularity_partition(g, to_rational(eps), k0, opt);
        std::vector<std::vector<int>> classes;
        for (const auto& c : run.partition.classes) classes.push_back(c.members());
        py::dict out;
        out["classes"] = classes;
        out["iterations"] = run.iterations;
        out["irregular_pairs"] = run.irregular_pairs;
        out["increments_ok"] = run.increments_ok;
        return out;
      },
      py::arg("g"), py::arg("eps"), py::arg("k0"), py::arg("seed") = 0);

  m.def(
      "hamilton_cycle", [](const Graph& g, int cap) { return cycle_or_none(hamilton_oracle(g, cap)); },
      py::arg("g"), py::arg("cap") = 20);
  m.def(
      "hamilton_cycle", [](const Digraph& g, int cap) { return cycle_or_none(hamilton_oracle(g, cap)); },
      py::arg("g"), py::arg("cap") = 20);
  m.def("rotation_hamilton", [](const Digraph& g) { return cycle_or_none(rotation_extension_hamilton(g).cycle); });

  m.def("certify", [](const Graph& g, const std::string& kind) {
    auto k = parse_kind(kind);
    if (!k) throw DomainError("unknown certificate kind " + kind);
    Certificate c = certify(g, *k);
    return py::make_tuple(c.satisfied, c.failing_index ? py::cast(*c.failing_index) : py::none());
  });

  m.def(
      "is_robust_outexpander",
      [](const Digraph& g, const py::object& nu, const py::object& tau, int cap) {
        ExpanderOptions opt;
        opt.cap = cap;
        ExpansionVerdict v = check_expander(g, {to_rational(nu), to_rational(tau), ExpansionMode::Out}, opt);
        return py::make_tuple(v.holds, v.violator ? py::cast(v.violator->members()) : py::none());
      },
      py::arg("g"), py::arg("nu"), py::arg("tau"), py::arg("cap") = 18);

  m.def(
      "extremal_number",
      [](int n, const Graph& h) {
        ExtremalResult r = extremal_number(n, h);
        return py::make_tuple(r.value, r.witness);
      },
      py::arg("n"), py::arg("h"));
  m.def(
      "ramsey_number",
      [](const Graph& h, int n_max) {
        RamseyResult r = ramsey_oracle(h, n_max);
        return r.value ? py::cast(*r.value) : py::none();
      },
      py::arg("h"), py::arg("n_max") = 7);
  m.def(
      "contains_subgraph", [](const Graph& g, const Graph& h) { return contains_subgraph(g, h); }, py::arg("g"),
      py::arg("h"));

  m.def("turan_graph", &turan_graph, py::arg("n"), py::arg("r"));
  m.def("chvatal_extremal", &chvatal_extremal, py::arg("n"), py::arg("r"));
  m.def("haggkvist_graph", &haggkvist_graph, py::arg("m"));
  m.def("antidirected_counterexample", &antidirected_counterexample, py::arg("m"));
  m.def("c6_sharpness_graph", &c6_sharpness_graph, py::arg("n"));
  m.def("complete_graph", &complete_graph, py::arg("n"));
  m.def("cycle_graph", &cycle_graph, py::arg("n"));
  m.def("petersen_graph", &petersen_graph);
  m.def("complete_digraph", &complete_digraph, py::arg("n"));
  m.def("random_graph", [](int n, double p, std::uint64_t seed) { return random_graph(n, p, seed); }, py::arg("n"),
        py::arg("p"), py::arg("seed"));
  m.def("random_digraph", [](int n, double p, std::uint64_t seed) { return random_digraph(n, p, seed); },
        py::arg("n"), py::arg("p"), py::arg("seed"));
}
