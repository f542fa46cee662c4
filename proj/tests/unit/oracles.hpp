#pragma once

// Slow reference implementations used only to cross-check the library.

#include <algorithm>
#include <limits>
#include <vector>

#include "spanwright/graph.hpp"

namespace oracle {

using spanwright::Edge;
using spanwright::EdgeId;
using spanwright::kInfinity;
using spanwright::Vertex;
using spanwright::Weight;
using spanwright::WeightedGraph;

// O(n^2) Prim over an adjacency matrix; returns forest weight.
inline Weight prim_weight(const WeightedGraph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::vector<Weight>> w(n, std::vector<Weight>(n, kInfinity));
  for (const Edge& e : g.edges()) w[e.u][e.v] = w[e.v][e.u] = e.w;
  std::vector<bool> in(n, false);
  std::vector<Weight> key(n, kInfinity);
  Weight total = 0;
  for (std::size_t round = 0; round < n; ++round) {
    std::size_t pick = n;
    for (std::size_t v = 0; v < n; ++v)
      if (!in[v] && (pick == n || key[v] < key[pick])) pick = v;
    if (key[pick] != kInfinity) total += key[pick];
    in[pick] = true;
    for (std::size_t v = 0; v < n; ++v)
      if (!in[v] && w[pick][v] < key[v]) key[v] = w[pick][v];
  }
  return total;
}

inline std::vector<Weight> bellman_ford(const WeightedGraph& g, Vertex s) {
  std::vector<Weight> d(g.num_vertices(), kInfinity);
  d[s] = 0;
  for (std::size_t round = 0; round + 1 < g.num_vertices(); ++round) {
    bool changed = false;
    for (const Edge& e : g.edges()) {
      if (d[e.u] != kInfinity && d[e.u] + e.w < d[e.v]) d[e.v] = d[e.u] + e.w, changed = true;
      if (d[e.v] != kInfinity && d[e.v] + e.w < d[e.u]) d[e.u] = d[e.v] + e.w, changed = true;
    }
    if (!changed) break;
  }
  return d;
}

inline std::vector<std::vector<Weight>> floyd_warshall(std::size_t n, const std::vector<Edge>& edges) {
  std::vector<std::vector<Weight>> d(n, std::vector<Weight>(n, kInfinity));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
  for (const Edge& e : edges) {
    d[e.u][e.v] = std::min(d[e.u][e.v], e.w);
    d[e.v][e.u] = std::min(d[e.v][e.u], e.w);
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (d[i][k] != kInfinity && d[k][j] != kInfinity && d[i][k] + d[k][j] < d[i][j])
          d[i][j] = d[i][k] + d[k][j];
  return d;
}

// Shortest cycle by removing each edge and asking for the hop distance
// between its endpoints; 0 means acyclic.
inline int girth_by_edge_removal(const WeightedGraph& g) {
  int best = 0;
  for (std::size_t skip = 0; skip < g.num_edges(); ++skip) {
    std::vector<Edge> rest;
    for (std::size_t i = 0; i < g.num_edges(); ++i)
      if (i != skip) {
        Edge e = g.edge(static_cast<EdgeId>(i));
        e.w = 1;
        rest.push_back(e);
      }
    auto d = floyd_warshall(g.num_vertices(), rest);
    const Edge& e = g.edge(static_cast<EdgeId>(skip));
    if (d[e.u][e.v] != kInfinity) {
      int len = static_cast<int>(d[e.u][e.v]) + 1;
      if (best == 0 || len < best) best = len;
    }
  }
  return best;
}

// Hop distance matrix of the subgraph given by edge ids.
inline std::vector<std::vector<Weight>> hop_matrix(const WeightedGraph& g, const std::vector<EdgeId>& ids) {
  std::vector<Edge> es;
  for (EdgeId id : ids) {
    Edge e = g.edge(id);
    e.w = 1;
    es.push_back(e);
  }
  return floyd_warshall(g.num_vertices(), es);
}

}  // namespace oracle
