#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

#include "spanwright/graph.hpp"

namespace spanwright {

// Text format:
//   c <comment>
//   p sp <n> <m>
//   e <u> <v> <w>      (0-based ids, decimal weight with at most 9 fractional digits)
WeightedGraph read_graph(std::istream& in);
WeightedGraph load_graph(const std::string& path);

void write_graph(std::ostream& out, const WeightedGraph& g);
void save_graph(const std::string& path, const WeightedGraph& g);

// Writes only the listed edges of g, in the same format.
void write_edges(std::ostream& out, const WeightedGraph& g, std::span<const EdgeId> ids);
void save_edges(const std::string& path, const WeightedGraph& g, std::span<const EdgeId> ids);

Weight parse_weight(std::string_view text);
std::string format_weight(Weight w);

// Maps each edge of `part` to the id of the same (u, v, w) edge of `host`.
// Returns false if some edge is missing from the host or has another weight.
bool match_edges(const WeightedGraph& host, const WeightedGraph& part, std::vector<EdgeId>& ids);

}  // namespace spanwright
