#pragma once

#include <vector>

#include "spanwright/graph.hpp"
#include "spanwright/oracle.hpp"

namespace spanwright {

// Classic greedy: scan by (weight, id), keep (u,v) iff d_H(u,v) > t * w(u,v).
SpannerResult greedy_spanner(const WeightedGraph& g, Ratio t);

// Keeps an edge iff the partial spanner has no u-v path of at most 2k-1 edges,
// ignoring weights. Baseline for the lightness benchmarks.
SpannerResult hop_greedy_spanner(const WeightedGraph& g, int k);

struct OracleSettings {
  int k = 2;
  Ratio eps{1, 2};
};

// Greedy scan where distances come from the incremental oracle. Weights are
// normalized to ceil(w / w_min); on the normalized graph the stretch is
// t = c (1+eps) (2k-1) with c = oracle_stretch(settings). The claimed stretch
// also absorbs the rounding, so it is at most 2t.
// When `transcript` is given it receives every oracle insertion and query.
SpannerResult approx_greedy_spanner(const WeightedGraph& g, int k, Ratio eps, OracleSettings oracle = {},
                                    std::vector<OracleEvent>* transcript = nullptr);

// Stretch used on normalized weights by approx_greedy_spanner.
Ratio approx_greedy_threshold(int k, Ratio eps, OracleSettings oracle = {});

// Greedy over the hop metric: the oracle sees unit edges and an edge is kept iff
// its estimated hop distance exceeds c (2k-1). The output has girth > 2k.
SpannerResult girth_spanner(const WeightedGraph& g, int k, OracleSettings oracle = {});

// Greedy with exact bounded distances maintained under insertions. Edges
// lighter than w_min / eps go through greedy_spanner at 2k-1; the rest are
// rounded up to whole multiples of w_min and tested against (1+eps)(2k-1).
// Claimed stretch (1+eps)^2 (2k-1).
SpannerResult quad_greedy_spanner(const WeightedGraph& g, int k, Ratio eps);

// Light O(k)-spanner: the clustering framework with eps = 1 and growth base 2,
// oracle greedy on bounded-aspect levels and the girth variant on light edges.
// The oracle runs with ceil(1/level_eps) levels.
SpannerResult fast_light_spanner(const WeightedGraph& g, int k, Ratio level_eps = Ratio(1, 2));

// (1 + O(eps))(2k-1)-spanner: the framework around quad_greedy_spanner and
// exact greedy, with internal epsilons scaled so the claim stays within
// (1+3eps)(2k-1).
SpannerResult slow_good_spanner(const WeightedGraph& g, int k, Ratio eps);

}  // namespace spanwright
