#include "spanwright/compose.hpp"

#include <cmath>
#include <random>

#include "spanwright/generators.hpp"

namespace spanwright {

namespace {

std::size_t idx(int x) { return static_cast<std::size_t>(x); }

bool lighter(const WeightedGraph& g, EdgeId a, EdgeId b) {
  return std::make_pair(g.edge(a).w, a) < std::make_pair(g.edge(b).w, b);
}

// Lightest alive edge from v into each adjacent cluster, as (cluster, edge).
std::vector<std::pair<int, EdgeId>> cheapest_per_cluster(const WeightedGraph& g, Vertex v,
                                                         const std::vector<int>& cluster,
                                                         const std::vector<char>& alive,
                                                         std::vector<EdgeId>& best) {
  std::vector<std::pair<int, EdgeId>> out;
  for (auto [w, e] : g.neighbors(v)) {
    if (!alive[idx(e)]) continue;
    const int c = cluster[idx(w)];
    if (c < 0) continue;
    EdgeId& b = best[idx(c)];
    if (b == -1) {
      out.push_back({c, e});
      b = e;
    } else if (lighter(g, e, b)) {
      b = e;
    }
  }
  for (auto& [c, e] : out) {
    e = best[idx(c)];
    best[idx(c)] = -1;
  }
  return out;
}

}  // namespace

int ceil_sqrt(int k) {
  int r = 0;
  while (r * r < k) ++r;
  return r;
}

SpannerResult baswana_sen(const WeightedGraph& g, int k, std::uint64_t seed) {
  if (k < 1) throw PreconditionError("k must be at least 1");
  const std::size_t n = g.num_vertices();
  std::mt19937_64 rng(seed);
  const double rate = n > 0 ? std::pow(static_cast<double>(n), -1.0 / k) : 1.0;
  constexpr std::uint64_t kGrain = std::uint64_t{1} << 53;
  const auto threshold = static_cast<std::uint64_t>(rate * static_cast<double>(kGrain));

  std::vector<int> cluster(n);  // cluster centre, -1 once a vertex leaves the clustering
  for (std::size_t v = 0; v < n; ++v) cluster[v] = static_cast<int>(v);
  std::vector<char> alive(g.num_edges(), 1), kept(g.num_edges(), 0);
  std::vector<EdgeId> scratch(n, -1);

  for (int round = 1; round < k; ++round) {
    std::vector<char> sampled(n, 0);
    for (std::size_t c = 0; c < n; ++c)
      if (cluster[c] == static_cast<int>(c)) sampled[c] = uniform_below(rng, kGrain) < threshold;
    std::vector<int> next(n, -1);
    std::vector<std::pair<Vertex, int>> drop;  // (vertex, old cluster) edge groups to remove
    for (std::size_t v = 0; v < n; ++v) {
      if (cluster[v] < 0) continue;
      if (sampled[idx(cluster[v])]) {
        next[v] = cluster[v];
        continue;
      }
      auto adj = cheapest_per_cluster(g, static_cast<Vertex>(v), cluster, alive, scratch);
      EdgeId star = -1;
      int target = -1;
      for (auto [c, e] : adj)
        if (sampled[idx(c)] && (star == -1 || lighter(g, e, star))) {
          star = e;
          target = c;
        }
      if (star == -1) {
        for (auto [c, e] : adj) {
          kept[idx(e)] = 1;
          drop.push_back({static_cast<Vertex>(v), c});
        }
        continue;
      }
      kept[idx(star)] = 1;
      next[v] = target;
      drop.push_back({static_cast<Vertex>(v), target});
      for (auto [c, e] : adj)
        if (lighter(g, e, star)) {
          kept[idx(e)] = 1;
          drop.push_back({static_cast<Vertex>(v), c});
        }
    }
    for (auto [v, c] : drop)
      for (auto [w, e] : g.neighbors(v))
        if (cluster[idx(w)] == c) alive[idx(e)] = 0;
    cluster = std::move(next);
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
      const Edge& x = g.edge(static_cast<EdgeId>(e));
      const int a = cluster[idx(x.u)], b = cluster[idx(x.v)];
      if (a < 0 || b < 0 || a == b) alive[e] = 0;
    }
  }

  for (std::size_t v = 0; v < n; ++v)
    for (auto [c, e] : cheapest_per_cluster(g, static_cast<Vertex>(v), cluster, alive, scratch)) kept[idx(e)] = 1;

  std::vector<EdgeId> out;
  for (std::size_t e = 0; e < g.num_edges(); ++e)
    if (kept[e]) out.push_back(static_cast<EdgeId>(e));
  return SpannerResult(std::move(out), Ratio(2 * k - 1));
}

SpannerResult compose_spanners(const WeightedGraph& g, const SpannerAlgorithm& inner,
                               const SpannerAlgorithm& outer) {
  if (!inner.run || !outer.run) throw PreconditionError("composition needs two algorithms");
  SpannerResult first = inner.run(g);
  SpannerResult second = outer.run(subgraph(g, first.edges));
  return SpannerResult(lift_edges(first.edges, second.edges), first.claimed_stretch * second.claimed_stretch);
}

SpannerResult double_invocation(const WeightedGraph& g, Ratio eps, int k, std::uint64_t seed, int outer_k) {
  if (k < 1) throw PreconditionError("k must be at least 1");
  if (eps.num != 1 || eps.den < 1) throw PreconditionError("eps must be 1/integer");
  const int k1 = static_cast<int>(eps.den);
  const int k2 = outer_k > 0 ? outer_k : ceil_sqrt(k);
  SpannerAlgorithm inner{"baswana-sen", Ratio(2 * k1 - 1),
                         [k1, seed](const WeightedGraph& h) { return baswana_sen(h, k1, seed ^ 0x9e3779b97f4a7c15ULL); }};
  SpannerAlgorithm outer{"baswana-sen", Ratio(2 * k2 - 1),
                         [k2, seed](const WeightedGraph& h) { return baswana_sen(h, k2, seed); }};
  return compose_spanners(g, inner, outer);
}

}  // namespace spanwright
