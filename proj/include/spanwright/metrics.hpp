#pragma once

#include <optional>
#include <span>
#include <vector>

#include "spanwright/graph.hpp"

namespace spanwright {

// Edge ids ordered by (weight, id). Every greedy-style pass uses this order.
std::vector<EdgeId> edges_by_weight(const WeightedGraph& g);

// Kruskal spanning forest (ties by edge id), ids sorted ascending.
std::vector<EdgeId> mst(const WeightedGraph& g);
Weight mst_weight(const WeightedGraph& g);

// Single-source shortest paths; kInfinity marks unreachable vertices.
std::vector<Weight> dijkstra(const WeightedGraph& g, Vertex source);

// Distances between each requested pair.
std::vector<Weight> exact_distances(const WeightedGraph& g,
                                    std::span<const std::pair<Vertex, Vertex>> pairs);

// Adjacency lists that grow one edge at a time; the working spanner of every
// incremental construction.
class DynamicGraph {
 public:
  explicit DynamicGraph(std::size_t n) : adj_(n) {}
  void add_edge(Vertex u, Vertex v, Weight w) {
    adj_[u].push_back({v, w});
    adj_[v].push_back({u, w});
  }
  std::size_t num_vertices() const { return adj_.size(); }
  struct Arc {
    Vertex to;
    Weight w;
  };
  const std::vector<Arc>& neighbors(Vertex v) const { return adj_[v]; }

  // Shortest u-v distance if it is at most `limit`, else kInfinity.
  Weight bounded_distance(Vertex u, Vertex v, Weight limit) const;

 private:
  std::vector<std::vector<Arc>> adj_;
  mutable std::vector<Weight> dist_;
  mutable std::vector<Vertex> touched_;
};

struct StretchReport {
  bool ok = true;
  bool subset = true;     // every spanner edge id is a host edge
  double max_ratio = 1;   // max over host edges of d_H(u,v) / w(u,v); inf if disconnected
  std::optional<EdgeId> witness;  // host edge attaining max_ratio
};

// Checks d_H(u,v) <= t * w(u,v) for every host edge; edge-wise checking is
// sufficient for all pairs.
StretchReport verify_stretch(const WeightedGraph& g, std::span<const EdgeId> spanner, Ratio t);

// w(H) / w(MST(G)); throws PreconditionError when g is disconnected.
double lightness(const WeightedGraph& g, std::span<const EdgeId> spanner);

// Length of a shortest cycle, ignoring weights, if it has at most hop_limit
// edges; nullopt stands for "no such cycle".
std::optional<int> girth(const WeightedGraph& g, int hop_limit);

}  // namespace spanwright
