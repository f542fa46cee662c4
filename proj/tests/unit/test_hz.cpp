#include <doctest.h>

#include <cmath>
#include <set>

#include "oracles.hpp"
#include "spanwright/generators.hpp"
#include "spanwright/hz.hpp"
#include "spanwright/metrics.hpp"

using namespace spanwright;

namespace {

WeightedGraph unit_gnm(std::size_t n, std::size_t m, std::uint64_t seed) {
  GraphFamilySpec s;
  s.family = Family::Gnm;
  s.n = n;
  s.m = m;
  s.seed = seed;
  return generate(s);
}

// Checks partition, cluster hop diameter, batch size/direction and ordering.
void check_modified(const WeightedGraph& g, int k, const HzResult& r) {
  const std::size_t n = g.num_vertices();
  const double base = std::pow(static_cast<double>(n), 1.0 / k);
  std::vector<int> owner(n, -1);
  for (std::size_t i = 0; i < r.steps.size(); ++i)
    for (Vertex v : r.steps[i].removed) {
      CHECK(owner[v] == -1);
      owner[v] = static_cast<int>(i);
    }
  for (std::size_t v = 0; v < n; ++v) CHECK(owner[v] >= 0);

  auto hop = oracle::hop_matrix(g, r.spanner.edges);
  bool seen_singleton = false;
  for (std::size_t i = 0; i < r.steps.size(); ++i) {
    const auto& s = r.steps[i];
    for (Vertex a : s.removed)
      for (Vertex b : s.removed) CHECK(hop[a][b] <= 2 * k - 2);

    CHECK(static_cast<double>(s.edges.size()) < static_cast<double>(s.removed.size()) * base + 1e-9);
    for (EdgeId e : s.edges) {
      int ou = owner[g.edge(e).u], ov = owner[g.edge(e).v];
      bool touches = ou == static_cast<int>(i) || ov == static_cast<int>(i);
      CHECK(touches);
      CHECK(std::min(ou, ov) >= static_cast<int>(i));
    }

    if (s.removed.size() == 1) {
      seen_singleton = true;
    } else {
      CHECK_FALSE(seen_singleton);
      CHECK(static_cast<double>(s.removed.size()) >= base);
    }
  }
}

}  // namespace

TEST_CASE("hz keeps a star") {
  std::vector<Edge> es;
  for (Vertex i = 1; i < 10; ++i) es.push_back({0, i, units(1)});
  WeightedGraph star(10, es);
  CHECK(hz_spanner(star, 2).spanner.size() == 9);
}

TEST_CASE("hz with k = 1 keeps everything") {
  std::vector<Edge> es;
  for (Vertex i = 0; i < 4; ++i)
    for (Vertex j = i + 1; j < 4; ++j) es.push_back({i, j, units(1)});
  WeightedGraph k4(4, es);
  CHECK(hz_spanner(k4, 1).spanner.size() == 6);
}

TEST_CASE("hz stretch and size") {
  auto g = unit_gnm(100, 1000, 5);
  auto r = hz_spanner(g, 2);
  CHECK(verify_stretch(g, r.spanner.edges, Ratio(3)).ok);
  CHECK(static_cast<double>(r.spanner.size()) <= 4 * std::pow(100.0, 1.5));
}

TEST_CASE("hz invariants over seeds") {
  for (int k = 1; k <= 4; ++k)
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
      auto g = unit_gnm(60, 60 + 40 * seed, seed);
      auto r = hz_spanner(g, k);
      const double base = std::pow(60.0, 1.0 / k);
      for (const auto& s : r.steps) {
        CHECK(s.radius <= k - 1);
        CHECK(static_cast<double>(s.edges.size()) <=
              std::ceil(static_cast<double>(s.removed.size()) * base) - 1 + 1e-9);
      }
      CHECK(static_cast<double>(r.spanner.size()) <= 60 * base + 60);
      CHECK(verify_stretch(g, r.spanner.edges, Ratio(2 * k - 1)).ok);
    }
}

TEST_CASE("modified hz on a path and an empty graph") {
  WeightedGraph p4(4, {{0, 1, units(1)}, {1, 2, units(1)}, {2, 3, units(1)}});
  auto r = modified_hz_spanner(p4, 2);
  CHECK(r.spanner.edges == std::vector<EdgeId>{0, 1, 2});

  WeightedGraph empty(5, {});
  auto e = modified_hz_spanner(empty, 2);
  CHECK(e.steps.size() == 5);
  for (const auto& s : e.steps) CHECK(s.removed.size() == 1);
  CHECK(e.spanner.size() == 0);
}

TEST_CASE("modified hz orders non-singletons first") {
  // A low-degree start vertex must not be deleted before a high-degree one.
  WeightedGraph g(4, {{0, 1, units(1)}, {1, 2, units(1)}, {1, 3, units(1)}, {2, 3, units(1)}});
  auto r = modified_hz_spanner(g, 2);
  check_modified(g, 2, r);
  CHECK(r.steps.front().center == 1);
}

TEST_CASE("modified hz properties") {
  check_modified(unit_gnm(80, 800, 1), 3, modified_hz_spanner(unit_gnm(80, 800, 1), 3));
  for (int k = 2; k <= 4; ++k)
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
      auto g = unit_gnm(40, 39 + 15 * seed, 100 + seed);
      check_modified(g, k, modified_hz_spanner(g, k));
    }
}
