#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "fixtures.hpp"
#include "spanwright/io.hpp"
#include "spanwright/suite.hpp"

using namespace spanwright;
using namespace fixtures;

namespace {

std::vector<WeightedGraph> seeded_graphs() {
  std::vector<WeightedGraph> out;
  for (std::uint64_t seed = 11; seed <= 16; ++seed) {
    out.push_back(gnm(60, 60 + 40 * seed % 300, seed, seed % 2 ? 1 : 50));
  }
  out.push_back(bad_cycle(3, 1000));
  out.push_back(path(30, 7));
  // two components
  auto a = gnm(25, 60, 3, 9);
  std::vector<Edge> es = a.edges();
  const auto b = gnm(20, 50, 4, 9);
  for (const Edge& e : b.edges()) es.push_back({e.u + 25, e.v + 25, e.w});
  out.emplace_back(45, es);
  return out;
}

WeightedGraph scaled(const WeightedGraph& g, std::int64_t factor) {
  std::vector<Edge> es = g.edges();
  for (Edge& e : es) e.w *= factor;
  return WeightedGraph(g.num_vertices(), es);
}

}  // namespace

TEST_CASE("every algorithm returns a valid spanner within budget") {
  AlgoParams p;
  p.k = 3;
  for (const auto& g : seeded_graphs()) {
    const int comps = connected_components(g).count;
    for (const auto& name : algorithm_names()) {
      CAPTURE(name);
      AlgoRun run = run_algorithm(name, g, p);
      const auto& ids = run.result.edges;
      CHECK(std::is_sorted(ids.begin(), ids.end()));
      CHECK(std::adjacent_find(ids.begin(), ids.end()) == ids.end());
      for (EdgeId e : ids) CHECK(static_cast<std::size_t>(e) < g.num_edges());
      CHECK(connected_components(subgraph(g, ids)).count == comps);
      CHECK(verify_run(g, run).ok);
      CHECK(run.budget >= Ratio(1));
      // pure in (graph, params)
      CHECK(run_algorithm(name, g, p).result.edges == ids);
    }
  }
}

TEST_CASE("exact greedy ignores a uniform weight scale") {
  for (const auto& g : seeded_graphs()) {
    for (int k : {2, 3}) {
      AlgoParams p;
      p.k = k;
      CHECK(run_algorithm("greedy", g, p).result.edges == run_algorithm("greedy", scaled(g, 3), p).result.edges);
    }
  }
}

TEST_CASE("edge list round trip") {
  for (const auto& g : seeded_graphs()) {
    std::stringstream ss;
    write_graph(ss, g);
    auto h = read_graph(ss);
    REQUIRE(h.num_vertices() == g.num_vertices());
    REQUIRE(h.num_edges() == g.num_edges());
    for (std::size_t i = 0; i < g.num_edges(); ++i) {
      CHECK(h.edges()[i].u == g.edges()[i].u);
      CHECK(h.edges()[i].v == g.edges()[i].v);
      CHECK(h.edges()[i].w == g.edges()[i].w);
    }
  }
}
