#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "spanwright/graph.hpp"
#include "spanwright/metrics.hpp"

namespace spanwright {

inline constexpr const char* kReportSchema = "spanwright/1";

struct AlgoParams {
  int k = 2;
  Ratio eps{1, 2};
  std::uint64_t seed = 1;
  bool strict = false;  // fastcw: paper constants instead of test constants
};

struct AlgoRun {
  SpannerResult result;
  Ratio budget;             // stretch the run is verified against
  bool hop_metric = false;  // guarantee holds for the unit-weight version of the input
};

const std::vector<std::string>& algorithm_names();

// Throws Error for an unknown name, PreconditionError for bad parameters.
AlgoRun run_algorithm(const std::string& name, const WeightedGraph& g, const AlgoParams& p);

// verify_stretch against the run's budget, on unit weights for hop-metric runs.
StretchReport verify_run(const WeightedGraph& g, const AlgoRun& run);

struct Instance {
  std::string name;
  WeightedGraph graph;
};

// Fixed 30-graph suite, n <= 200 and m <= 2000.
std::vector<Instance> standard_instances();

// Lightness of the hop-count baseline against the light constructions on the
// bad cycle and the clique-cycle graph.
nlohmann::json bench_appendix_a(int k);

// Every algorithm on a seeded set of graphs, stretch verified.
nlohmann::json bench_random(std::uint64_t seed);

// Interleaved insertions and queries against exact distances. Internal
// invariants are rechecked every `check_every` events (0 disables).
nlohmann::json bench_oracle(std::uint64_t seed, std::size_t queries_per_config, std::size_t check_every = 0);

}  // namespace spanwright
