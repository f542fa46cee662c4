#include "spanwright/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>

namespace spanwright {

namespace {

using Item = std::pair<Weight, Vertex>;
using MinHeap = std::priority_queue<Item, std::vector<Item>, std::greater<>>;

}  // namespace

std::vector<EdgeId> edges_by_weight(const WeightedGraph& g) {
  std::vector<EdgeId> order(g.num_edges());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](EdgeId a, EdgeId b) { return g.edge(a).w < g.edge(b).w; });
  return order;
}

std::vector<EdgeId> mst(const WeightedGraph& g) {
  UnionFind uf(g.num_vertices());
  std::vector<EdgeId> tree;
  for (EdgeId e : edges_by_weight(g)) {
    if (uf.unite(g.edge(e).u, g.edge(e).v)) tree.push_back(e);
  }
  std::sort(tree.begin(), tree.end());
  return tree;
}

Weight mst_weight(const WeightedGraph& g) {
  Weight s = 0;
  for (EdgeId e : mst(g)) s += g.edge(e).w;
  return s;
}

std::vector<Weight> dijkstra(const WeightedGraph& g, Vertex source) {
  std::vector<Weight> dist(g.num_vertices(), kInfinity);
  MinHeap heap;
  dist[source] = 0;
  heap.push({0, source});
  while (!heap.empty()) {
    auto [d, x] = heap.top();
    heap.pop();
    if (d != dist[x]) continue;
    for (auto [y, e] : g.neighbors(x)) {
      Weight nd = d + g.edge(e).w;
      if (nd < dist[y]) {
        dist[y] = nd;
        heap.push({nd, y});
      }
    }
  }
  return dist;
}

std::vector<Weight> exact_distances(const WeightedGraph& g,
                                    std::span<const std::pair<Vertex, Vertex>> pairs) {
  std::vector<Weight> out;
  out.reserve(pairs.size());
  Vertex cached = -1;
  std::vector<Weight> dist;
  for (auto [u, v] : pairs) {
    if (u != cached) {
      dist = dijkstra(g, u);
      cached = u;
    }
    out.push_back(dist[v]);
  }
  return out;
}

Weight DynamicGraph::bounded_distance(Vertex u, Vertex v, Weight limit) const {
  if (u == v) return 0;
  if (dist_.size() != adj_.size()) dist_.assign(adj_.size(), kInfinity);
  for (Vertex t : touched_) dist_[t] = kInfinity;
  touched_.clear();

  MinHeap heap;
  dist_[u] = 0;
  touched_.push_back(u);
  heap.push({0, u});
  while (!heap.empty()) {
    auto [d, x] = heap.top();
    heap.pop();
    if (d != dist_[x]) continue;
    if (x == v) return d;
    for (const Arc& a : adj_[x]) {
      Weight nd = d + a.w;
      if (nd > limit || nd >= dist_[a.to]) continue;
      if (dist_[a.to] == kInfinity) touched_.push_back(a.to);
      dist_[a.to] = nd;
      heap.push({nd, a.to});
    }
  }
  return kInfinity;
}

StretchReport verify_stretch(const WeightedGraph& g, std::span<const EdgeId> spanner, Ratio t) {
  StretchReport rep;
  std::vector<Edge> kept;
  kept.reserve(spanner.size());
  for (EdgeId e : spanner) {
    if (e < 0 || static_cast<std::size_t>(e) >= g.num_edges()) {
      rep.subset = false;
      rep.ok = false;
      continue;
    }
    kept.push_back(g.edge(e));
  }
  WeightedGraph h(g.num_vertices(), std::move(kept));

  std::vector<std::vector<EdgeId>> by_source(g.num_vertices());
  for (std::size_t e = 0; e < g.num_edges(); ++e) by_source[g.edge(static_cast<EdgeId>(e)).u].push_back(static_cast<EdgeId>(e));

  rep.max_ratio = g.num_edges() == 0 ? 1.0 : 0.0;
  for (std::size_t s = 0; s < g.num_vertices(); ++s) {
    if (by_source[s].empty()) continue;
    auto dist = dijkstra(h, static_cast<Vertex>(s));
    for (EdgeId e : by_source[s]) {
      const Edge& ed = g.edge(e);
      Weight d = dist[ed.v];
      double ratio = d == kInfinity ? INFINITY : static_cast<double>(d) / static_cast<double>(ed.w);
      if (!rep.witness || ratio > rep.max_ratio) {
        rep.max_ratio = ratio;
        rep.witness = e;
      }
      if (!within_stretch(d, t, ed.w)) rep.ok = false;
    }
  }
  return rep;
}

double lightness(const WeightedGraph& g, std::span<const EdgeId> spanner) {
  if (!is_connected(g)) throw PreconditionError("lightness needs a connected graph");
  Weight base = mst_weight(g);
  Weight w = 0;
  for (EdgeId e : spanner) w += g.edge(e).w;
  if (base == 0) return 1.0;
  return static_cast<double>(w) / static_cast<double>(base);
}

std::optional<int> girth(const WeightedGraph& g, int hop_limit) {
  const std::size_t n = g.num_vertices();
  int best = hop_limit + 1;
  std::vector<int> depth(n, -1);
  std::vector<EdgeId> via(n, -1);
  std::vector<Vertex> queue;
  for (std::size_t s = 0; s < n; ++s) {
    for (Vertex x : queue) depth[x] = -1;
    queue.clear();
    depth[s] = 0;
    via[s] = -1;
    queue.push_back(static_cast<Vertex>(s));
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex x = queue[head];
      // Any cycle closed from here has at least 2 * depth edges.
      if (2 * depth[x] >= best) break;
      for (auto [y, e] : g.neighbors(x)) {
        if (e == via[x]) continue;
        if (depth[y] < 0) {
          depth[y] = depth[x] + 1;
          via[y] = e;
          queue.push_back(y);
        } else {
          best = std::min(best, depth[x] + depth[y] + 1);
        }
      }
    }
  }
  if (best > hop_limit) return std::nullopt;
  return best;
}

}  // namespace spanwright
