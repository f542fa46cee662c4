#pragma once

#include <cstdint>
#include <limits>
#include <memory>
#include <string>
#include <vector>

#include "spanwright/types.hpp"

namespace spanwright {

// Distances inside the oracles are plain positive integers (not weight ticks).
using Distance = std::int64_t;
inline constexpr Distance kFar = std::numeric_limits<Distance>::max();

struct OracleParams {
  int k = 2;            // number of levels
  Ratio eps{1, 2};      // radius granularity
  Distance d = 1;       // distances up to d are answered within the stretch bound
};

// 2 (3 + 2 eps)^(k-1) - 1.
Ratio oracle_stretch(int k, Ratio eps);

struct OracleEvent {
  enum class Kind { Insert, Query } kind = Kind::Insert;
  std::int32_t u = 0;
  std::int32_t v = 0;
  Distance value = 0;  // edge weight, or the answer of a query
};

// Text form used by the CLI and tests: "+ u v w" / "? u v answer" with "*" for
// an infinite answer.
std::string format_event(const OracleEvent& e);
OracleEvent parse_event(const std::string& line);

struct OracleInvariantReport {
  bool ok = true;
  std::vector<std::string> failures;
};

// Deterministic incremental approximate distance oracle for short distances.
// Answers are never below the true distance; when the true distance is at most
// d they are at most oracle_stretch(k, eps) times it. Edge budget m starts at n
// and doubles (with a replay of all insertions) whenever it is exceeded.
class IncrementalOracle {
 public:
  IncrementalOracle(std::size_t n, OracleParams params, bool record_transcript = false);
  ~IncrementalOracle();
  IncrementalOracle(IncrementalOracle&&) noexcept;
  IncrementalOracle& operator=(IncrementalOracle&&) noexcept;

  // Inserting an existing pair with a smaller weight lowers its weight; a
  // heavier or equal reinsertion is ignored.
  void insert(std::int32_t u, std::int32_t v, Distance w);
  Distance query(std::int32_t u, std::int32_t v);

  std::size_t num_vertices() const;
  std::size_t edge_budget() const;        // current m
  std::size_t insertions() const;         // accepted insertions so far
  std::size_t level_size(int i) const;    // |A_i|
  std::size_t rebuilds() const;
  std::size_t level_budget(int i) const;   // m_i
  Distance level_radius(int i) const;      // d_i rounded down to an integer
  int class_count(int i) const;            // number of radius classes at level i
  const std::vector<OracleEvent>& transcript() const;
  const OracleParams& params() const;

  // Recomputes every ball from scratch and compares with the maintained state.
  OracleInvariantReport check_invariants() const;

 private:
  struct State;
  std::unique_ptr<State> state_;
  std::vector<OracleEvent> transcript_;
  bool record_;
};

// Replays a transcript into a fresh oracle and reports whether every recorded
// query answer is reproduced.
bool replay_transcript(std::size_t n, OracleParams params, const std::vector<OracleEvent>& events);

// Exact distances up to a threshold under edge insertions: one truncated
// shortest-path tree per source.
class EsApsp {
 public:
  EsApsp(std::size_t n, Distance threshold);
  void insert(std::int32_t u, std::int32_t v, Distance w);
  // Exact distance if it is at most the threshold, otherwise kFar.
  Distance query(std::int32_t u, std::int32_t v) const;
  std::size_t num_vertices() const { return adj_.size(); }

 private:
  void relax_from(std::size_t source, std::int32_t start, Distance start_dist);

  Distance threshold_;
  std::vector<std::vector<std::pair<std::int32_t, Distance>>> adj_;
  std::vector<std::vector<Distance>> dist_;
};

}  // namespace spanwright
