#pragma once

#include <vector>

#include "spanwright/graph.hpp"

namespace spanwright {

// One ball-growing round: the ball B(center, radius) is deleted from the
// residual graph and `edges` is the BFS tree of B(center, radius + 1).
struct HzStep {
  Vertex center = 0;
  int radius = 0;
  std::vector<Vertex> removed;
  std::vector<EdgeId> edges;
};

struct HzResult {
  SpannerResult spanner;
  std::vector<HzStep> steps;  // in deletion order; the removed sets partition V
};

// Unweighted (2k-1)-spanner by ball growing. Weights are ignored: the stretch
// guarantee is in hops. `growth_n` sets the growth base growth_n^(1/k); zero
// means the vertex count of g.
HzResult hz_spanner(const WeightedGraph& g, int k, std::size_t growth_n = 0);

// Variant that first exhausts all high-degree centers (residual degree + 1
// above the growth base) in ascending id order, so every non-singleton set
// precedes every singleton and has more than growth_n^(1/k) members.
HzResult modified_hz_spanner(const WeightedGraph& g, int k, std::size_t growth_n = 0);

// growth_n^(1/k), the factor a ball must beat to keep growing.
double hz_growth_base(std::size_t growth_n, int k);

}  // namespace spanwright
