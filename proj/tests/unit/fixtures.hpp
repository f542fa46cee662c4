#pragma once

#include <algorithm>
#include <cmath>
#include <random>

#include "spanwright/generators.hpp"
#include "spanwright/metrics.hpp"

namespace fixtures {

using namespace spanwright;

inline WeightedGraph gnm(std::size_t n, std::size_t m, std::uint64_t seed, std::int64_t maxw = 1) {
  GraphFamilySpec s;
  s.family = Family::Gnm;
  s.n = n;
  s.m = m;
  s.seed = seed;
  s.max_weight = maxw;
  return generate(s);
}

inline WeightedGraph bad_cycle(int k, std::int64_t heavy) {
  GraphFamilySpec s;
  s.family = Family::BadCycle;
  s.k = k;
  s.heavy = units(heavy);
  return generate(s);
}

inline WeightedGraph path(std::size_t n, std::int64_t maxw = 1) {
  GraphFamilySpec s;
  s.family = Family::Path;
  s.n = n;
  s.max_weight = maxw;
  return generate(s);
}

inline WeightedGraph complete(std::size_t n) {
  GraphFamilySpec s;
  s.family = Family::Complete;
  s.n = n;
  return generate(s);
}

// Same topology with weights spread log-uniformly over [1, rho^span).
inline WeightedGraph log_spread(const WeightedGraph& g, double rho, int span, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Edge> es = g.edges();
  for (Edge& e : es) {
    double x = static_cast<double>(uniform_below(rng, 1'000'000)) / 1e6 * span;
    e.w = static_cast<Weight>(std::floor(std::pow(rho, x) * 1e3)) * 1'000'000;
  }
  return WeightedGraph(g.num_vertices(), es);
}

// MST edges set to one unit, every other weight clamped to [1, cap] units.
inline WeightedGraph unit_mst(const WeightedGraph& g, std::int64_t cap) {
  std::vector<Edge> es = g.edges();
  for (Edge& e : es) e.w = std::clamp(e.w, units(1), units(cap));
  for (EdgeId e : mst(g)) es[static_cast<std::size_t>(e)].w = units(1);
  return WeightedGraph(g.num_vertices(), es);
}

inline bool contains_all(const std::vector<EdgeId>& big, const std::vector<EdgeId>& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

// Tree diameter (in edges) of each cluster, walking only tree edges inside it.
inline std::vector<int> cluster_diameters(const WeightedGraph& tree, const std::vector<int>& of, int count) {
  std::vector<int> diam(static_cast<std::size_t>(count), 0);
  const std::size_t n = tree.num_vertices();
  std::vector<int> depth(n, -1);
  std::vector<Vertex> queue;
  for (std::size_t s = 0; s < n; ++s) {
    queue.assign(1, static_cast<Vertex>(s));
    depth[s] = 0;
    for (std::size_t h = 0; h < queue.size(); ++h) {
      const Vertex x = queue[h];
      for (auto [y, e] : tree.neighbors(x)) {
        (void)e;
        if (depth[static_cast<std::size_t>(y)] != -1 || of[static_cast<std::size_t>(y)] != of[s]) continue;
        depth[static_cast<std::size_t>(y)] = depth[static_cast<std::size_t>(x)] + 1;
        queue.push_back(y);
      }
    }
    int& d = diam[static_cast<std::size_t>(of[s])];
    for (Vertex x : queue) {
      d = std::max(d, depth[static_cast<std::size_t>(x)]);
      depth[static_cast<std::size_t>(x)] = -1;
    }
  }
  return diam;
}

// Connectedness of every cluster through tree edges.
inline bool clusters_connected(const WeightedGraph& tree, const std::vector<int>& of, int count) {
  std::vector<int> seen_root(static_cast<std::size_t>(count), -1);
  UnionFind uf(tree.num_vertices());
  for (const Edge& e : tree.edges())
    if (of[static_cast<std::size_t>(e.u)] == of[static_cast<std::size_t>(e.v)]) uf.unite(e.u, e.v);
  for (std::size_t v = 0; v < tree.num_vertices(); ++v) {
    int& r = seen_root[static_cast<std::size_t>(of[v])];
    const int root = uf.find(static_cast<int>(v));
    if (r == -1) r = root;
    if (r != root) return false;
  }
  return true;
}

}  // namespace fixtures
