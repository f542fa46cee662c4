#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "spanwright/graph.hpp"

namespace spanwright {

enum class Family {
  BadCycle,     // 2k+1 cycle: 2k unit edges and one edge of weight W
  CliqueCycle,  // unit clique and unit cycle on n/2 vertices each, all cross edges weight W
  Gnm,          // connected G(n, m): random tree backbone plus uniform extra edges
  Grid,         // n x cols lattice
  Path,
  Complete,
  TreePlus,     // unit-weight random tree plus extra edges weighted in [2, max_weight]
};

struct GraphFamilySpec {
  Family family = Family::Gnm;
  std::size_t n = 0;
  std::size_t m = 0;          // Gnm, TreePlus
  std::size_t cols = 0;       // Grid; 0 means square
  int k = 1;                  // BadCycle
  Weight heavy = units(1);    // BadCycle, CliqueCycle
  std::int64_t max_weight = 1;  // integer weights drawn from [1, max_weight]; 1 gives unit weights
  std::uint64_t seed = 1;
};

Family parse_family(const std::string& name);
std::string family_name(Family f);

WeightedGraph generate(const GraphFamilySpec& spec);

// Uniform integer in [0, bound) from a 64-bit engine, by rejection.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

}  // namespace spanwright
