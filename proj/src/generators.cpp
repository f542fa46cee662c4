#include "spanwright/generators.hpp"

#include <unordered_set>

namespace spanwright {

namespace {

struct Builder {
  std::vector<Edge> edges;
  std::unordered_set<std::uint64_t> seen;

  bool add(Vertex u, Vertex v, Weight w) {
    if (u == v) return false;
    auto a = std::min(u, v), b = std::max(u, v);
    auto key = (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
    if (!seen.insert(key).second) return false;
    edges.push_back({u, v, w});
    return true;
  }
};

Weight draw_weight(std::mt19937_64& rng, std::int64_t max_weight) {
  if (max_weight <= 1) return units(1);
  return units(1 + static_cast<std::int64_t>(uniform_below(rng, static_cast<std::uint64_t>(max_weight))));
}

// Random recursive tree: vertex i attaches to a uniform earlier vertex.
void random_tree(Builder& b, std::size_t n, std::mt19937_64& rng, std::int64_t max_weight) {
  for (std::size_t i = 1; i < n; ++i) {
    auto parent = static_cast<Vertex>(uniform_below(rng, i));
    b.add(parent, static_cast<Vertex>(i), draw_weight(rng, max_weight));
  }
}

void random_extra(Builder& b, std::size_t n, std::size_t m, std::mt19937_64& rng,
                  const std::function<Weight()>& weight) {
  if (n < 2) return;
  std::size_t cap = n * (n - 1) / 2;
  if (m > cap) throw PreconditionError("m exceeds n(n-1)/2");
  while (b.edges.size() < m) {
    auto u = static_cast<Vertex>(uniform_below(rng, n));
    auto v = static_cast<Vertex>(uniform_below(rng, n));
    if (u == v) continue;
    Weight w = weight();
    b.add(u, v, w);
  }
}

}  // namespace

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) return 0;
  std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                        std::numeric_limits<std::uint64_t>::max() % bound;
  for (;;) {
    std::uint64_t x = rng();
    if (x < limit) return x % bound;
  }
}

Family parse_family(const std::string& name) {
  if (name == "bad-cycle") return Family::BadCycle;
  if (name == "clique-cycle") return Family::CliqueCycle;
  if (name == "gnm") return Family::Gnm;
  if (name == "grid") return Family::Grid;
  if (name == "path") return Family::Path;
  if (name == "complete") return Family::Complete;
  if (name == "tree-plus") return Family::TreePlus;
  throw Error("unknown graph family '" + name + "'");
}

std::string family_name(Family f) {
  switch (f) {
    case Family::BadCycle: return "bad-cycle";
    case Family::CliqueCycle: return "clique-cycle";
    case Family::Gnm: return "gnm";
    case Family::Grid: return "grid";
    case Family::Path: return "path";
    case Family::Complete: return "complete";
    case Family::TreePlus: return "tree-plus";
  }
  return "?";
}

WeightedGraph generate(const GraphFamilySpec& spec) {
  std::mt19937_64 rng(spec.seed);
  Builder b;
  const Weight unit = units(1);
  switch (spec.family) {
    case Family::BadCycle: {
      if (spec.k < 1) throw PreconditionError("bad-cycle needs k >= 1");
      if (spec.heavy <= 0) throw PreconditionError("bad-cycle needs W > 0");
      auto len = static_cast<Vertex>(2 * spec.k + 1);
      for (Vertex i = 0; i + 1 < len; ++i) b.add(i, i + 1, unit);
      b.add(len - 1, 0, spec.heavy);
      return WeightedGraph(static_cast<std::size_t>(len), std::move(b.edges));
    }
    case Family::CliqueCycle: {
      if (spec.n < 2 || spec.n % 2 != 0) throw PreconditionError("clique-cycle needs even n >= 2");
      if (spec.heavy <= 0) throw PreconditionError("clique-cycle needs W > 0");
      auto half = static_cast<Vertex>(spec.n / 2);
      for (Vertex i = 0; i < half; ++i)
        for (Vertex j = i + 1; j < half; ++j) b.add(i, j, unit);
      for (Vertex i = 0; i + 1 < half; ++i) b.add(half + i, half + i + 1, unit);
      if (half >= 3) b.add(half + half - 1, half, unit);
      for (Vertex i = 0; i < half; ++i)
        for (Vertex j = 0; j < half; ++j) b.add(i, half + j, spec.heavy);
      return WeightedGraph(spec.n, std::move(b.edges));
    }
    case Family::Gnm: {
      if (spec.n >= 1 && spec.m + 1 < spec.n) throw PreconditionError("gnm needs m >= n - 1");
      random_tree(b, spec.n, rng, spec.max_weight);
      random_extra(b, spec.n, spec.m, rng, [&] { return draw_weight(rng, spec.max_weight); });
      return WeightedGraph(spec.n, std::move(b.edges));
    }
    case Family::TreePlus: {
      if (spec.n >= 1 && spec.m + 1 < spec.n) throw PreconditionError("tree-plus needs m >= n - 1");
      random_tree(b, spec.n, rng, 1);
      std::int64_t top = std::max<std::int64_t>(spec.max_weight, 2);
      random_extra(b, spec.n, spec.m, rng, [&] {
        return units(2 + static_cast<std::int64_t>(uniform_below(rng, static_cast<std::uint64_t>(top - 1))));
      });
      return WeightedGraph(spec.n, std::move(b.edges));
    }
    case Family::Grid: {
      std::size_t rows = spec.n, cols = spec.cols == 0 ? spec.n : spec.cols;
      auto id = [&](std::size_t r, std::size_t c) { return static_cast<Vertex>(r * cols + c); };
      for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) {
          if (c + 1 < cols) b.add(id(r, c), id(r, c + 1), draw_weight(rng, spec.max_weight));
          if (r + 1 < rows) b.add(id(r, c), id(r + 1, c), draw_weight(rng, spec.max_weight));
        }
      return WeightedGraph(rows * cols, std::move(b.edges));
    }
    case Family::Path: {
      for (std::size_t i = 0; i + 1 < spec.n; ++i)
        b.add(static_cast<Vertex>(i), static_cast<Vertex>(i + 1), draw_weight(rng, spec.max_weight));
      return WeightedGraph(spec.n, std::move(b.edges));
    }
    case Family::Complete: {
      for (std::size_t i = 0; i < spec.n; ++i)
        for (std::size_t j = i + 1; j < spec.n; ++j)
          b.add(static_cast<Vertex>(i), static_cast<Vertex>(j), draw_weight(rng, spec.max_weight));
      return WeightedGraph(spec.n, std::move(b.edges));
    }
  }
  throw Error("unhandled family");
}

}  // namespace spanwright
