#include "spanwright/hz.hpp"

#include <cmath>
#include <set>

namespace spanwright {

double hz_growth_base(std::size_t growth_n, int k) {
  return std::pow(static_cast<double>(growth_n), 1.0 / static_cast<double>(k));
}

namespace {

constexpr double kSlack = 1e-9;

class BallGrower {
 public:
  BallGrower(const WeightedGraph& g, int k, std::size_t growth_n)
      : g_(g),
        k_(k),
        base_(hz_growth_base(growth_n == 0 ? g.num_vertices() : growth_n, k)),
        active_(g.num_vertices(), true),
        residual_degree_(g.num_vertices()),
        mark_(g.num_vertices(), 0),
        parent_edge_(g.num_vertices(), -1) {
    if (k < 1) throw PreconditionError("k must be at least 1");
    for (std::size_t v = 0; v < g.num_vertices(); ++v)
      residual_degree_[v] = static_cast<int>(g.degree(static_cast<Vertex>(v)));
  }

  bool active(Vertex v) const { return active_[v]; }
  int residual_degree(Vertex v) const { return residual_degree_[v]; }
  bool high_degree(Vertex v) const {
    return static_cast<double>(residual_degree_[v] + 1) > std::floor(base_ + kSlack);
  }

  // Grows a ball around v, records the step, deletes the ball and reports the
  // vertices whose residual degree dropped.
  HzStep grow(Vertex v, std::vector<Vertex>& degree_changed) {
    ++stamp_;
    std::vector<Vertex> order{v};
    std::vector<std::size_t> layer_end{1};  // |B(v, r)| for r = 0, 1, ...
    mark_[v] = stamp_;
    parent_edge_[v] = -1;
    int r = 0;
    for (;;) {
      std::size_t begin = r == 0 ? 0 : layer_end[static_cast<std::size_t>(r) - 1];
      std::size_t end = layer_end[static_cast<std::size_t>(r)];
      for (std::size_t i = begin; i < end; ++i) {
        for (auto [y, e] : g_.neighbors(order[i])) {
          if (!active_[y] || mark_[y] == stamp_) continue;
          mark_[y] = stamp_;
          parent_edge_[y] = e;
          order.push_back(y);
        }
      }
      layer_end.push_back(order.size());
      double inner = static_cast<double>(end);
      double outer = static_cast<double>(order.size());
      if (outer <= std::floor(inner * base_ + kSlack)) break;
      ++r;
      if (r >= k_) throw Error("ball growth exceeded radius k-1");
    }

    HzStep step;
    step.center = v;
    step.radius = r;
    std::size_t inside = layer_end[static_cast<std::size_t>(r)];
    step.removed.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(inside));
    for (std::size_t i = 1; i < order.size(); ++i) step.edges.push_back(parent_edge_[order[i]]);

    for (Vertex x : step.removed) active_[x] = false;
    for (Vertex x : step.removed) {
      for (auto [y, e] : g_.neighbors(x)) {
        if (!active_[y]) continue;
        --residual_degree_[y];
        degree_changed.push_back(y);
      }
    }
    return step;
  }

 private:
  const WeightedGraph& g_;
  int k_;
  double base_;
  std::vector<bool> active_;
  std::vector<int> residual_degree_;
  std::vector<unsigned> mark_;
  std::vector<EdgeId> parent_edge_;
  unsigned stamp_ = 0;
};

HzResult finish(std::vector<HzStep> steps, int k) {
  std::vector<EdgeId> all;
  for (const HzStep& s : steps) all.insert(all.end(), s.edges.begin(), s.edges.end());
  HzResult out;
  out.spanner = SpannerResult(std::move(all), Ratio(2 * k - 1));
  out.steps = std::move(steps);
  return out;
}

}  // namespace

HzResult hz_spanner(const WeightedGraph& g, int k, std::size_t growth_n) {
  BallGrower grower(g, k, growth_n);
  std::vector<HzStep> steps;
  std::vector<Vertex> changed;
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    if (!grower.active(static_cast<Vertex>(v))) continue;
    steps.push_back(grower.grow(static_cast<Vertex>(v), changed));
    changed.clear();
  }
  return finish(std::move(steps), k);
}

HzResult modified_hz_spanner(const WeightedGraph& g, int k, std::size_t growth_n) {
  BallGrower grower(g, k, growth_n);
  std::set<Vertex> eligible;
  for (std::size_t v = 0; v < g.num_vertices(); ++v)
    if (grower.high_degree(static_cast<Vertex>(v))) eligible.insert(static_cast<Vertex>(v));

  std::vector<HzStep> steps;
  std::vector<Vertex> changed;
  while (!eligible.empty()) {
    Vertex v = *eligible.begin();
    HzStep step = grower.grow(v, changed);
    for (Vertex x : step.removed) eligible.erase(x);
    for (Vertex y : changed)
      if (!grower.high_degree(y)) eligible.erase(y);
    changed.clear();
    steps.push_back(std::move(step));
  }
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    if (!grower.active(static_cast<Vertex>(v))) continue;
    steps.push_back(grower.grow(static_cast<Vertex>(v), changed));
    changed.clear();
  }
  return finish(std::move(steps), k);
}

}  // namespace spanwright
