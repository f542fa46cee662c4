#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "spanwright/types.hpp"

namespace spanwright {

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  Weight w = 0;
};

struct Incidence {
  Vertex to;
  EdgeId edge;
};

// Undirected, simple, positively weighted graph with immutable CSR adjacency.
// Endpoints are stored with u < v. Parallel edges collapse to the lightest
// copy at the position of the first occurrence.
class WeightedGraph {
 public:
  WeightedGraph() = default;
  WeightedGraph(std::size_t n, std::vector<Edge> edges);

  std::size_t num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }

  std::span<const Incidence> neighbors(Vertex v) const {
    auto b = offsets_[static_cast<std::size_t>(v)];
    auto e = offsets_[static_cast<std::size_t>(v) + 1];
    return {adjacency_.data() + b, e - b};
  }
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }

  Weight total_weight() const;
  Weight min_weight() const;
  Weight max_weight() const;

  // Same vertex set, every edge weight replaced by one unit.
  WeightedGraph unit_weighted() const;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Incidence> adjacency_;
};

// Edge subset of a host graph plus the stretch the producing algorithm claims.
// Edge ids refer to the host and are kept sorted and unique.
struct SpannerResult {
  std::vector<EdgeId> edges;
  Ratio claimed_stretch{1};

  SpannerResult() = default;
  SpannerResult(std::vector<EdgeId> ids, Ratio stretch);

  std::size_t size() const { return edges.size(); }
  Weight weight(const WeightedGraph& host) const;
};

// Named spanner construction with its proven stretch, used wherever one
// construction is plugged into another.
struct SpannerAlgorithm {
  std::string name;
  Ratio stretch{1};
  std::function<SpannerResult(const WeightedGraph&)> run;
};

// Graph on the host's vertex set using the listed edges, in list order, so edge
// i of the result is ids[i] of the host.
WeightedGraph subgraph(const WeightedGraph& host, std::span<const EdgeId> ids);

// Translates edge ids of subgraph(host, ids) back to host ids.
std::vector<EdgeId> lift_edges(std::span<const EdgeId> ids, std::span<const EdgeId> sub_edges);

// Sorted-unique union of edge id lists.
std::vector<EdgeId> merge_edges(std::vector<EdgeId> a, std::span<const EdgeId> b);

// Quotient of a host edge subset under a vertex clustering. Intra-cluster
// edges vanish; parallel edges keep one representative, the lightest host edge
// (ties by id). Contracted edges get weight_of(representative), or one unit
// when weight_of is empty.
struct Contraction {
  WeightedGraph graph;
  std::vector<EdgeId> representative;  // contracted edge id -> host edge id
};
Contraction contract(const WeightedGraph& host, std::span<const int> cluster_of, int clusters,
                     std::span<const EdgeId> edges,
                     const std::function<Weight(EdgeId)>& weight_of = {});

struct Components {
  std::vector<int> of;  // component index per vertex
  int count = 0;
};
Components connected_components(const WeightedGraph& g);
bool is_connected(const WeightedGraph& g);

// Runs `algo` on each connected component separately and reassembles the
// result over the host ids. Isolated vertices contribute nothing.
SpannerResult run_per_component(const WeightedGraph& g,
                                const std::function<SpannerResult(const WeightedGraph&)>& algo);

class UnionFind {
 public:
  explicit UnionFind(std::size_t n);
  int find(int x);
  bool unite(int a, int b);

 private:
  std::vector<int> parent_;
  std::vector<int> rank_;
};

}  // namespace spanwright
