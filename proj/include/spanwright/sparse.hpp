#pragma once

#include <vector>

#include "spanwright/graph.hpp"

namespace spanwright {

// One (weight class, level) round of the linear-size construction.
struct SparseLevelTrace {
  int weight_class = 0;
  int level = 0;
  int bucket = 0;
  std::size_t clusters = 0;       // clusters entering the round
  std::size_t next_clusters = 0;  // clusters after coarsening
  std::size_t edges_added = 0;
  double potential_before = 0;    // 2 * clusters * n^(1/k)
  double potential_after = 0;
};

// Clusters entering a round, with the spanner of their weight class as it
// stood at that moment (the first `partial_edges` entries of class_edges).
struct SparseClusterSnapshot {
  int weight_class = 0;
  int level = 0;
  std::vector<std::vector<Vertex>> clusters;
  std::size_t partial_edges = 0;
  double diameter_bound = 0;  // in weight ticks
};

struct SparseOptions {
  bool record_clusters = false;
};

struct SparseResult {
  SpannerResult spanner;
  int period = 0;  // number of weight classes
  std::vector<SparseLevelTrace> trace;
  std::vector<std::vector<EdgeId>> class_edges;  // per weight class, in insertion order
  std::vector<SparseClusterSnapshot> snapshots;
};

// Number of interleaved weight classes: the smallest whole number of
// (1+eps)-buckets spanning a factor of at least 18k/eps, using a class
// multiplier that is a whole multiple of ln k.
int sparse_period(int k, Ratio eps);

// Spanner with O(n^{1+1/k}) edges per weight class. The MST is always added.
SparseResult sparse_spanner(const WeightedGraph& g, int k, Ratio eps, const SparseOptions& options = {});

struct DiameterCheck {
  bool ok = true;
  double worst_ratio = 0;  // max diameter / bound over all recorded clusters
};

// Measures every recorded cluster inside its class's partial spanner.
DiameterCheck cluster_diameter_bound_check(const WeightedGraph& g, const SparseResult& result);

// MST plus, for each (1+eps)-bucket of non-MST edges, an HZ spanner of the
// cluster graph whose clusters have MST diameter at most eps/2 of the bucket's
// lower end.
SpannerResult aspect_spanner(const WeightedGraph& g, int k, Ratio eps);

}  // namespace spanwright
