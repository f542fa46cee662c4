#pragma once

#include <vector>

#include "spanwright/graph.hpp"

namespace spanwright {

struct ClusterLevel {
  int level = 0;
  Ratio threshold;               // minimum cluster size eps * g^(level k)
  std::vector<int> of;           // cluster id per vertex
  int count = 0;
  std::vector<std::size_t> size;
  std::vector<char> core;        // per vertex: member of its cluster's core
  bool undersized = false;       // some component was too small for any core
};

// Nested partitions of a spanning tree's vertex set; level i refines level i+1.
struct ClusterHierarchy {
  std::vector<ClusterLevel> levels;
};

// Clusters of a tree (edge weights ignored) for levels 0..max_level. Each level
// grows cores of at least eps * g^(ik) vertices out of whole clusters of the
// level below, then hangs every leftover piece onto a core through its
// lowest-id tree edge. A tree component too small for a core becomes a single
// cluster. With g^k >= 4 every cluster has tree diameter <= 4 eps g^(ik).
ClusterHierarchy build_clustering(const WeightedGraph& tree, int k, int g, Ratio eps, int max_level);

struct FrameworkConfig {
  int k = 2;
  int g = 2;
  Ratio eps{1, 2};
  SpannerAlgorithm bounded;  // run on unit-tree graphs with weights below g^k
  SpannerAlgorithm light;    // run on the edges of weight at most w'/eps
};

struct FrameworkLevelTrace {
  int level = 0;
  std::size_t clusters = 0;
  std::size_t bucket_edges = 0;   // non-tree edges whose rounded weight falls in this level
  std::size_t level_graph_edges = 0;
  std::size_t kept = 0;           // bucket edges returned by the bounded algorithm
};

struct FrameworkTrace {
  Ratio unit;                     // w' = w(MST) / (n-1), in ticks
  std::size_t subdivision_vertices = 0;
  std::size_t light_edges = 0;
  std::size_t light_kept = 0;
  std::vector<FrameworkLevelTrace> levels;
  ClusterHierarchy hierarchy;     // on the subdivided tree
};

// max((1+eps)(1+8eps) f_bounded, f_light).
Ratio framework_stretch(const FrameworkConfig& cfg);

// MST, plus the light algorithm on light edges, plus the bounded algorithm on
// one cluster graph per weight level of the remaining edges (weights rounded
// up to multiples of w', MST edges subdivided into unit pieces). Disconnected
// inputs are handled per component; the trace then describes the last one.
SpannerResult framework_run(const WeightedGraph& g, const FrameworkConfig& cfg, FrameworkTrace* trace = nullptr);

}  // namespace spanwright
