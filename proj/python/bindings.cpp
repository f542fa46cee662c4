#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>

#include "spanwright/generators.hpp"
#include "spanwright/io.hpp"
#include "spanwright/metrics.hpp"
#include "spanwright/suite.hpp"

namespace py = pybind11;
using namespace spanwright;

namespace {

Weight to_ticks(double w) { return static_cast<Weight>(std::llround(w * static_cast<double>(kWeightScale))); }

double to_units(Weight w) { return static_cast<double>(w) / static_cast<double>(kWeightScale); }

WeightedGraph make_graph(std::size_t n, const std::vector<std::tuple<int, int, double>>& edges) {
  std::vector<Edge> es;
  es.reserve(edges.size());
  for (const auto& [u, v, w] : edges) {
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n)
      throw py::value_error("endpoint out of range");
    es.push_back({u, v, to_ticks(w)});
  }
  return WeightedGraph(n, std::move(es));
}

py::list edge_list(const WeightedGraph& g) {
  py::list out;
  for (const Edge& e : g.edges()) out.append(py::make_tuple(e.u, e.v, to_units(e.w)));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Graph spanner constructions with exact stretch checks";
  // translators run newest first, so the subclass goes last
  py::register_exception<Error>(m, "SpanwrightError", PyExc_RuntimeError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);

  py::class_<WeightedGraph>(m, "Graph")
      .def(py::init(&make_graph), py::arg("n"), py::arg("edges"))
      .def_property_readonly("n", &WeightedGraph::num_vertices)
      .def_property_readonly("m", &WeightedGraph::num_edges)
      .def_property_readonly("edges", &edge_list)
      .def("__repr__", [](const WeightedGraph& g) {
        return "<Graph n=" + std::to_string(g.num_vertices()) + " m=" + std::to_string(g.num_edges()) + ">";
      });

  m.def(
      "generate",
      [](const std::string& family, std::size_t n, std::size_t m_, int k, double heavy, std::int64_t max_weight,
         std::uint64_t seed, std::size_t cols) {
        GraphFamilySpec s;
        s.family = parse_family(family);
        s.n = n;
        s.m = m_;
        s.k = k;
        s.heavy = to_ticks(heavy);
        s.max_weight = max_weight;
        s.seed = seed;
        s.cols = cols;
        return generate(s);
      },
      py::arg("family"), py::arg("n") = 0, py::arg("m") = 0, py::arg("k") = 1, py::arg("W") = 1.0,
      py::arg("max_weight") = 1, py::arg("seed") = 1, py::arg("cols") = 0);
  m.def("load_graph", &load_graph, py::arg("path"));
  m.def("save_graph", &save_graph, py::arg("path"), py::arg("graph"));
  m.def("mst", &mst, py::arg("graph"));
  m.def("mst_weight", [](const WeightedGraph& g) { return to_units(mst_weight(g)); }, py::arg("graph"));
  m.def("algorithms", &algorithm_names);

  m.def(
      "build",
      [](const WeightedGraph& g, const std::string& algo, int k, const std::string& eps, std::uint64_t seed,
         bool strict) {
        AlgoParams p;
        p.k = k;
        p.eps = Ratio::parse(eps);
        p.seed = seed;
        p.strict = strict;
        AlgoRun run;
        {
          py::gil_scoped_release release;
          run = run_algorithm(algo, g, p);
        }
        py::dict out;
        out["edges"] = run.result.edges;
        out["claimed_stretch"] = run.result.claimed_stretch.str();
        out["budget"] = run.budget.str();
        out["hop_metric"] = run.hop_metric;
        return out;
      },
      py::arg("graph"), py::arg("algo"), py::arg("k") = 2, py::arg("eps") = "1/2", py::arg("seed") = 1,
      py::arg("strict") = false);

  m.def(
      "verify_stretch",
      [](const WeightedGraph& g, const std::vector<EdgeId>& edges, const std::string& t) {
        StretchReport r = verify_stretch(g, edges, Ratio::parse(t));
        py::dict out;
        out["ok"] = r.ok;
        out["subset"] = r.subset;
        out["max_ratio"] = r.max_ratio;
        out["witness"] = r.witness ? py::cast(*r.witness) : py::none();
        return out;
      },
      py::arg("graph"), py::arg("edges"), py::arg("stretch"));
  m.def(
      "lightness", [](const WeightedGraph& g, const std::vector<EdgeId>& edges) { return lightness(g, edges); },
      py::arg("graph"), py::arg("edges"));
  m.def(
      "bench_json",
      [](const std::string& suite, int k, std::uint64_t seed, std::size_t queries) {
        if (suite == "appendix-a") return bench_appendix_a(k).dump();
        if (suite == "random") return bench_random(seed).dump();
        if (suite == "oracle") return bench_oracle(seed, queries).dump();
        throw py::value_error("unknown suite '" + suite + "'");
      },
      py::arg("suite"), py::arg("k") = 3, py::arg("seed") = 1, py::arg("queries") = 1250);
}
