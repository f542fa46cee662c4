#pragma once

#include <cstdint>

#include "spanwright/graph.hpp"

namespace spanwright {

// Randomized (2k-1)-spanner: k-1 rounds of cluster sampling at rate n^(-1/k),
// then every vertex keeps its lightest edge to each adjacent final cluster.
// Deterministic for a given seed.
SpannerResult baswana_sen(const WeightedGraph& g, int k, std::uint64_t seed);

// outer applied to the spanner produced by inner, on the inner spanner's own
// weights. Claims the product of the two claimed stretches.
SpannerResult compose_spanners(const WeightedGraph& g, const SpannerAlgorithm& inner, const SpannerAlgorithm& outer);

// Two Baswana-Sen passes: 1/eps rounds first, then `outer_k` rounds (0 picks
// ceil(sqrt(k))). eps must be 1/integer. The outer pass uses `seed` itself,
// so eps = 1 reproduces baswana_sen(g, outer_k, seed). Claimed
// (2/eps - 1)(2 outer_k - 1).
SpannerResult double_invocation(const WeightedGraph& g, Ratio eps, int k, std::uint64_t seed, int outer_k = 0);

// ceil(sqrt(k)).
int ceil_sqrt(int k);

}  // namespace spanwright
