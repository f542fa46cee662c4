#include "spanwright/greedy.hpp"

#include <algorithm>
#include <numeric>

#include "spanwright/clustering.hpp"
#include "spanwright/metrics.hpp"

namespace spanwright {

namespace {

__extension__ typedef __int128 i128;

// floor(t * w), saturating.
Weight scale_down(Ratio t, Weight w) {
  const i128 v = static_cast<i128>(t.num) * w / t.den;
  return v >= static_cast<i128>(kInfinity) ? kInfinity - 1 : static_cast<Weight>(v);
}

std::int64_t ceil_div(Weight a, Weight b) { return (a + b - 1) / b; }

// Shortest hop count between u and v if it is at most `limit`.
bool within_hops(const DynamicGraph& h, Vertex u, Vertex v, int limit, std::vector<int>& depth,
                 std::vector<Vertex>& queue) {
  queue.assign(1, u);
  depth[static_cast<std::size_t>(u)] = 0;
  bool found = u == v;
  for (std::size_t head = 0; head < queue.size() && !found; ++head) {
    const Vertex x = queue[head];
    const int dx = depth[static_cast<std::size_t>(x)];
    if (dx == limit) continue;
    for (const auto& arc : h.neighbors(x)) {
      if (depth[static_cast<std::size_t>(arc.to)] != -1) continue;
      depth[static_cast<std::size_t>(arc.to)] = dx + 1;
      queue.push_back(arc.to);
      if (arc.to == v) {
        found = true;
        break;
      }
    }
  }
  for (Vertex x : queue) depth[static_cast<std::size_t>(x)] = -1;
  return found;
}

SpannerResult all_edges(const WeightedGraph& g) {
  std::vector<EdgeId> all(g.num_edges());
  std::iota(all.begin(), all.end(), 0);
  return SpannerResult(std::move(all), Ratio(1));
}

void check_k(int k) {
  if (k < 1) throw PreconditionError("k must be at least 1");
}

}  // namespace

SpannerResult greedy_spanner(const WeightedGraph& g, Ratio t) {
  if (t < Ratio(1)) throw PreconditionError("greedy needs t >= 1");
  DynamicGraph h(g.num_vertices());
  std::vector<EdgeId> kept;
  for (EdgeId e : edges_by_weight(g)) {
    const Edge& x = g.edge(e);
    if (h.bounded_distance(x.u, x.v, scale_down(t, x.w)) == kInfinity) {
      h.add_edge(x.u, x.v, x.w);
      kept.push_back(e);
    }
  }
  return SpannerResult(std::move(kept), t);
}

SpannerResult hop_greedy_spanner(const WeightedGraph& g, int k) {
  check_k(k);
  DynamicGraph h(g.num_vertices());
  std::vector<int> depth(g.num_vertices(), -1);
  std::vector<Vertex> queue;
  std::vector<EdgeId> kept;
  for (EdgeId e : edges_by_weight(g)) {
    const Edge& x = g.edge(e);
    if (!within_hops(h, x.u, x.v, 2 * k - 1, depth, queue)) {
      h.add_edge(x.u, x.v, x.w);
      kept.push_back(e);
    }
  }
  // every rejected edge has a path of at most 2k-1 lighter edges
  return SpannerResult(std::move(kept), Ratio(2 * k - 1));
}

Ratio approx_greedy_threshold(int k, Ratio eps, OracleSettings oracle) {
  return oracle_stretch(oracle.k, oracle.eps) * (Ratio(1) + eps) * Ratio(2 * k - 1);
}

SpannerResult approx_greedy_spanner(const WeightedGraph& g, int k, Ratio eps, OracleSettings oracle,
                                    std::vector<OracleEvent>* transcript) {
  check_k(k);
  if (eps <= Ratio(0)) throw PreconditionError("eps must be positive");
  const Ratio t = approx_greedy_threshold(k, eps, oracle);
  if (g.num_edges() == 0) return SpannerResult({}, t);

  const Weight wmin = g.min_weight();
  std::vector<Distance> scaled(g.num_edges());
  Distance top = 1;
  Ratio rounding(1);
  for (EdgeId e = 0; e < static_cast<EdgeId>(g.num_edges()); ++e) {
    const Weight w = g.edge(e).w;
    scaled[static_cast<std::size_t>(e)] = ceil_div(w, wmin);
    top = std::max(top, scaled[static_cast<std::size_t>(e)]);
    if (scaled[static_cast<std::size_t>(e)] * wmin != w)
      rounding = max(rounding, Ratio(scaled[static_cast<std::size_t>(e)] * (wmin / std::gcd(wmin, w)),
                                     w / std::gcd(wmin, w)));
  }
  OracleParams p;
  p.k = oracle.k;
  p.eps = oracle.eps;
  p.d = scale_up(t, top);
  IncrementalOracle o(g.num_vertices(), p, transcript != nullptr);
  std::vector<EdgeId> kept;
  for (EdgeId e : edges_by_weight(g)) {
    const Edge& x = g.edge(e);
    const Distance w = scaled[static_cast<std::size_t>(e)];
    const Distance est = o.query(x.u, x.v);
    if (est == kFar || Ratio(est) > t * Ratio(w)) {
      o.insert(x.u, x.v, w);
      kept.push_back(e);
    }
  }
  if (transcript) *transcript = o.transcript();
  return SpannerResult(std::move(kept), t * rounding);
}

SpannerResult girth_spanner(const WeightedGraph& g, int k, OracleSettings oracle) {
  check_k(k);
  const Distance d = (oracle_stretch(oracle.k, oracle.eps) * Ratio(2 * k - 1)).ceil();
  OracleParams p;
  p.k = oracle.k;
  p.eps = oracle.eps;
  p.d = d;
  IncrementalOracle o(g.num_vertices(), p);
  std::vector<EdgeId> kept;
  for (EdgeId e : edges_by_weight(g)) {
    const Edge& x = g.edge(e);
    const Distance est = o.query(x.u, x.v);
    if (est == kFar || est > d) {
      o.insert(x.u, x.v, 1);
      kept.push_back(e);
    }
  }
  return SpannerResult(std::move(kept), Ratio(d));
}

SpannerResult quad_greedy_spanner(const WeightedGraph& g, int k, Ratio eps) {
  check_k(k);
  if (eps <= Ratio(0)) throw PreconditionError("eps must be positive");
  const Ratio stretch = (Ratio(1) + eps) * (Ratio(1) + eps) * Ratio(2 * k - 1);
  if (g.num_edges() == 0) return SpannerResult({}, stretch);
  const Weight wmin = g.min_weight();
  const Ratio t = (Ratio(1) + eps) * Ratio(2 * k - 1);
  std::vector<EdgeId> order = edges_by_weight(g);

  // light prefix: w < wmin / eps
  std::size_t split = 0;
  while (split < order.size()) {
    const Weight w = g.edge(order[split]).w;
    if (static_cast<i128>(w) * eps.num >= static_cast<i128>(wmin) * eps.den) break;
    ++split;
  }
  std::vector<EdgeId> prefix(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(split));
  std::sort(prefix.begin(), prefix.end());
  WeightedGraph light = subgraph(g, prefix);
  std::vector<EdgeId> kept = lift_edges(prefix, greedy_spanner(light, Ratio(2 * k - 1)).edges);

  Distance top = 1;
  for (EdgeId e : order) top = std::max(top, ceil_div(g.edge(e).w, wmin));
  EsApsp es(g.num_vertices(), scale_up(t, top));
  for (EdgeId e : kept) es.insert(g.edge(e).u, g.edge(e).v, ceil_div(g.edge(e).w, wmin));
  for (std::size_t j = split; j < order.size(); ++j) {
    const Edge& x = g.edge(order[j]);
    const Distance w = ceil_div(x.w, wmin);
    const Distance dist = es.query(x.u, x.v);
    if (dist == kFar || Ratio(dist) > t * Ratio(w)) {
      es.insert(x.u, x.v, w);
      kept.push_back(order[j]);
    }
  }
  return SpannerResult(std::move(kept), stretch);
}

SpannerResult fast_light_spanner(const WeightedGraph& g, int k, Ratio level_eps) {
  check_k(k);
  if (level_eps <= Ratio(0)) throw PreconditionError("eps must be positive");
  OracleSettings os;
  os.k = static_cast<int>((Ratio(1) / level_eps).ceil());
  if (k == 1) return all_edges(g);
  FrameworkConfig cfg;
  cfg.k = k;
  cfg.g = 2;
  cfg.eps = Ratio(1);
  cfg.bounded = {"approx-greedy", approx_greedy_threshold(k, Ratio(1), os) * Ratio(2),
                 [k, os](const WeightedGraph& part) { return approx_greedy_spanner(part, k, Ratio(1), os); }};
  const Distance hops = (oracle_stretch(os.k, os.eps) * Ratio(2 * k - 1)).ceil();
  cfg.light = {"girth", Ratio(hops), [k, os](const WeightedGraph& part) { return girth_spanner(part, k, os); }};
  return framework_run(g, cfg);
}

SpannerResult slow_good_spanner(const WeightedGraph& g, int k, Ratio eps) {
  check_k(k);
  if (eps <= Ratio(0) || eps > Ratio(1)) throw PreconditionError("slow_good needs 0 < eps <= 1");
  if (k == 1) return all_edges(g);
  const Ratio inner = eps / Ratio(4);
  FrameworkConfig cfg;
  cfg.k = k;
  cfg.g = 2;
  cfg.eps = eps / Ratio(16);
  cfg.bounded = {"quad-greedy", (Ratio(1) + inner) * (Ratio(1) + inner) * Ratio(2 * k - 1),
                 [k, inner](const WeightedGraph& part) { return quad_greedy_spanner(part, k, inner); }};
  cfg.light = {"greedy", Ratio(2 * k - 1),
               [k](const WeightedGraph& part) { return greedy_spanner(part, Ratio(2 * k - 1)); }};
  return framework_run(g, cfg);
}

}  // namespace spanwright
