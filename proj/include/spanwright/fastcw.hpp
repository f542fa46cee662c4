#pragma once

#include <span>
#include <vector>

#include "spanwright/graph.hpp"

namespace spanwright {

struct FastCwConfig {
  int k = 640;
  Ratio eps{1, 2};
  int g = 20;
  int c = 24;
  int d = 160;
  int mu = 0;          // 0 picks the smallest mu with g^mu >= k / eps
  bool strict = true;  // the constants above, and k >= 640

  // Small constants for desk-sized instances; strict checks off.
  static FastCwConfig test_mode(int k, Ratio eps);
};

// Resolved mu (at least 1).
int fastcw_mu(const FastCwConfig& cfg);

// (2k-1)(1+5eps).
Ratio fastcw_stretch(const FastCwConfig& cfg);

// One level of the hierarchy. Level 0 partitions the vertices; level i groups
// the clusters of level i-1 ("nodes").
struct FastCwLevel {
  int level = 0;
  std::int64_t min_size = 0;       // ceil(k g^i / c), saturated
  std::vector<int> of;             // cluster per vertex
  int count = 0;
  std::vector<std::size_t> size;   // vertices per cluster
  std::vector<char> heavy;         // per cluster
  std::vector<int> origin;         // per cluster: node the heavy cluster was opened around, else -1
  std::vector<int> origin_degree;  // per cluster: that node's degree when the cluster was opened
  std::vector<char> core;          // per vertex
  std::vector<EdgeId> created;     // edges that joined nodes into the level's clusters
  std::size_t heavy_count = 0;
  std::size_t edges_added = 0;     // edges this level added to the spanner
  bool undersized = false;         // a whole tree component was below min_size
};

struct FastCwPhase1 {
  std::vector<FastCwLevel> levels;  // 0..k-1
  std::vector<EdgeId> edges;        // MST plus every edge added, sorted
};

struct FastCwRound {
  int r = 0;
  std::size_t vertices = 0;        // contracted clusters inside heavy clusters
  std::size_t created_edges = 0;   // cluster-forming edges offered to the round
  std::size_t graph_edges = 0;     // edges of the contracted graph
  Weight floor_weight = 0;         // k g^((r-1)mu) / eps, in ticks
  Weight msf_weight = 0;           // spanning forest weight under the raised weights
  std::size_t kept = 0;
};

struct FastCwTrace {
  int mu = 0;
  FastCwPhase1 phase1;
  std::size_t base_edges = 0;  // edges of weight <= g^mu
  std::size_t base_kept = 0;
  std::vector<FastCwRound> rounds;
};

// Cluster hierarchy of a graph whose MST edges weigh one unit and whose edges
// weigh at most g^k units. Throws PreconditionError on bad input or config.
FastCwPhase1 fastcw_phase1(const WeightedGraph& g, const FastCwConfig& cfg);

// Phase-1 edges plus one bounded-aspect spanner per round of levels. Same
// input contract as fastcw_phase1; disconnected inputs run per component and
// the trace then describes the last one.
SpannerResult fastcw_core(const WeightedGraph& g, const FastCwConfig& cfg, FastCwTrace* trace = nullptr);

// Any weighted graph: the clustering framework with fastcw_core on the
// bounded levels and sparse_spanner on the light edges. Internal epsilons are
// scaled so the claim stays within (2k-1)(1+5eps).
SpannerResult fastcw_full(const WeightedGraph& g, const FastCwConfig& cfg);

// Per cluster of `level`: largest distance between two members using only
// spanner edges inside the cluster (kInfinity if it falls apart).
std::vector<Weight> fastcw_cluster_diameters(const WeightedGraph& g, std::span<const EdgeId> spanner,
                                             const FastCwLevel& level);

}  // namespace spanwright
