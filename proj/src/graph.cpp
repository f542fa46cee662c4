#include "spanwright/graph.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace spanwright {

WeightedGraph::WeightedGraph(std::size_t n, std::vector<Edge> edges) : n_(n) {
  std::unordered_map<std::uint64_t, std::size_t> seen;
  seen.reserve(edges.size() * 2);
  edges_.reserve(edges.size());
  for (const Edge& raw : edges) {
    if (raw.u < 0 || raw.v < 0 || static_cast<std::size_t>(raw.u) >= n ||
        static_cast<std::size_t>(raw.v) >= n)
      throw Error("edge endpoint out of range");
    if (raw.u == raw.v) throw Error("self-loop on vertex " + std::to_string(raw.u));
    if (raw.w <= 0) throw Error("non-positive edge weight");
    Edge e = raw;
    if (e.u > e.v) std::swap(e.u, e.v);
    auto key = (static_cast<std::uint64_t>(e.u) << 32) | static_cast<std::uint32_t>(e.v);
    auto [it, fresh] = seen.emplace(key, edges_.size());
    if (fresh) {
      edges_.push_back(e);
    } else if (e.w < edges_[it->second].w) {
      edges_[it->second].w = e.w;
    }
  }

  offsets_.assign(n_ + 1, 0);
  for (const Edge& e : edges_) {
    ++offsets_[static_cast<std::size_t>(e.u) + 1];
    ++offsets_[static_cast<std::size_t>(e.v) + 1];
  }
  std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
  adjacency_.resize(2 * edges_.size());
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    adjacency_[fill[static_cast<std::size_t>(e.u)]++] = {e.v, static_cast<EdgeId>(i)};
    adjacency_[fill[static_cast<std::size_t>(e.v)]++] = {e.u, static_cast<EdgeId>(i)};
  }
}

Weight WeightedGraph::total_weight() const {
  Weight s = 0;
  for (const Edge& e : edges_) s = add_weight(s, e.w);
  return s;
}

Weight WeightedGraph::min_weight() const {
  Weight m = kInfinity;
  for (const Edge& e : edges_) m = std::min(m, e.w);
  return m;
}

Weight WeightedGraph::max_weight() const {
  Weight m = 0;
  for (const Edge& e : edges_) m = std::max(m, e.w);
  return m;
}

WeightedGraph WeightedGraph::unit_weighted() const {
  std::vector<Edge> es = edges_;
  for (Edge& e : es) e.w = kWeightScale;
  return WeightedGraph(n_, std::move(es));
}

SpannerResult::SpannerResult(std::vector<EdgeId> ids, Ratio stretch)
    : edges(std::move(ids)), claimed_stretch(stretch) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

Weight SpannerResult::weight(const WeightedGraph& host) const {
  Weight s = 0;
  for (EdgeId e : edges) s = add_weight(s, host.edge(e).w);
  return s;
}

WeightedGraph subgraph(const WeightedGraph& host, std::span<const EdgeId> ids) {
  std::vector<Edge> es;
  es.reserve(ids.size());
  for (EdgeId e : ids) es.push_back(host.edge(e));
  return WeightedGraph(host.num_vertices(), std::move(es));
}

std::vector<EdgeId> lift_edges(std::span<const EdgeId> ids, std::span<const EdgeId> sub_edges) {
  std::vector<EdgeId> out;
  out.reserve(sub_edges.size());
  for (EdgeId e : sub_edges) out.push_back(ids[static_cast<std::size_t>(e)]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<EdgeId> merge_edges(std::vector<EdgeId> a, std::span<const EdgeId> b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

Contraction contract(const WeightedGraph& host, std::span<const int> cluster_of, int clusters,
                     std::span<const EdgeId> edges,
                     const std::function<Weight(EdgeId)>& weight_of) {
  std::vector<EdgeId> order;
  order.reserve(edges.size());
  for (EdgeId e : edges)
    if (cluster_of[host.edge(e).u] != cluster_of[host.edge(e).v]) order.push_back(e);
  std::sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) {
    const Weight wa = host.edge(a).w, wb = host.edge(b).w;
    return wa != wb ? wa < wb : a < b;
  });
  Contraction c;
  std::vector<Edge> es;
  std::unordered_map<std::uint64_t, char> seen;
  seen.reserve(order.size() * 2);
  for (EdgeId e : order) {
    Vertex a = cluster_of[host.edge(e).u], b = cluster_of[host.edge(e).v];
    if (a > b) std::swap(a, b);
    auto key = (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
    if (!seen.emplace(key, 0).second) continue;
    es.push_back({a, b, weight_of ? weight_of(e) : kWeightScale});
    c.representative.push_back(e);
  }
  c.graph = WeightedGraph(static_cast<std::size_t>(clusters), std::move(es));
  return c;
}

Components connected_components(const WeightedGraph& g) {
  Components c;
  c.of.assign(g.num_vertices(), -1);
  std::vector<Vertex> stack;
  for (std::size_t s = 0; s < g.num_vertices(); ++s) {
    if (c.of[s] >= 0) continue;
    c.of[s] = c.count;
    stack.push_back(static_cast<Vertex>(s));
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (auto [y, e] : g.neighbors(x)) {
        if (c.of[static_cast<std::size_t>(y)] < 0) {
          c.of[static_cast<std::size_t>(y)] = c.count;
          stack.push_back(y);
        }
      }
    }
    ++c.count;
  }
  return c;
}

bool is_connected(const WeightedGraph& g) { return connected_components(g).count <= 1; }

SpannerResult run_per_component(const WeightedGraph& g,
                                const std::function<SpannerResult(const WeightedGraph&)>& algo) {
  Components comp = connected_components(g);
  if (comp.count <= 1) return algo(g);

  std::vector<std::vector<Vertex>> members(static_cast<std::size_t>(comp.count));
  std::vector<Vertex> local(g.num_vertices());
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    auto& m = members[static_cast<std::size_t>(comp.of[v])];
    local[v] = static_cast<Vertex>(m.size());
    m.push_back(static_cast<Vertex>(v));
  }
  std::vector<std::vector<EdgeId>> edge_ids(members.size());
  for (std::size_t e = 0; e < g.num_edges(); ++e)
    edge_ids[static_cast<std::size_t>(comp.of[static_cast<std::size_t>(g.edge(static_cast<EdgeId>(e)).u)])]
        .push_back(static_cast<EdgeId>(e));

  std::vector<EdgeId> kept;
  Ratio stretch(1);
  for (std::size_t c = 0; c < members.size(); ++c) {
    if (edge_ids[c].empty()) continue;
    std::vector<Edge> es;
    es.reserve(edge_ids[c].size());
    for (EdgeId e : edge_ids[c]) {
      Edge x = g.edge(e);
      x.u = local[static_cast<std::size_t>(x.u)];
      x.v = local[static_cast<std::size_t>(x.v)];
      es.push_back(x);
    }
    WeightedGraph part(members[c].size(), std::move(es));
    SpannerResult r = algo(part);
    stretch = max(stretch, r.claimed_stretch);
    for (EdgeId e : r.edges) kept.push_back(edge_ids[c][static_cast<std::size_t>(e)]);
  }
  return SpannerResult(std::move(kept), stretch);
}

UnionFind::UnionFind(std::size_t n) : parent_(n), rank_(n, 0) {
  std::iota(parent_.begin(), parent_.end(), 0);
}

int UnionFind::find(int x) {
  while (parent_[static_cast<std::size_t>(x)] != x) {
    auto& p = parent_[static_cast<std::size_t>(x)];
    p = parent_[static_cast<std::size_t>(p)];
    x = p;
  }
  return x;
}

bool UnionFind::unite(int a, int b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (rank_[static_cast<std::size_t>(a)] < rank_[static_cast<std::size_t>(b)]) std::swap(a, b);
  parent_[static_cast<std::size_t>(b)] = a;
  if (rank_[static_cast<std::size_t>(a)] == rank_[static_cast<std::size_t>(b)])
    ++rank_[static_cast<std::size_t>(a)];
  return true;
}

}  // namespace spanwright
