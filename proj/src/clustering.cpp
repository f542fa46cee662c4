#include "spanwright/clustering.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "spanwright/metrics.hpp"

namespace spanwright {

namespace {

__extension__ typedef __int128 i128;

// eps * g^e as a Ratio, or nullopt once it exceeds `cap`.
std::optional<Ratio> scaled_power(Ratio eps, int g, int e, std::int64_t cap) {
  Ratio r = eps;
  for (int i = 0; i < e; ++i) {
    if (r > Ratio(cap)) return std::nullopt;
    r = r * Ratio(g);
  }
  if (r > Ratio(cap)) return std::nullopt;
  return r;
}

struct UnitArc {
  int to;
  EdgeId edge;
};

}  // namespace

ClusterHierarchy build_clustering(const WeightedGraph& tree, int k, int g, Ratio eps, int max_level) {
  if (k < 1 || g < 2) throw PreconditionError("clustering needs k >= 1 and g >= 2");
  if (eps <= Ratio(0)) throw PreconditionError("clustering needs eps > 0");
  const std::size_t n = tree.num_vertices();
  const auto big = static_cast<std::int64_t>(n) + 1;

  ClusterHierarchy h;
  std::vector<int> prev(n);
  std::iota(prev.begin(), prev.end(), 0);
  std::vector<std::size_t> prev_size(n, 1);
  int prev_count = static_cast<int>(n);

  for (int i = 0; i <= max_level; ++i) {
    const auto thr = scaled_power(eps, g, i * k, big);
    const Ratio threshold = thr ? *thr : Ratio(big);

    const auto units = static_cast<std::size_t>(prev_count);
    std::vector<std::vector<UnitArc>> adj(units);
    for (EdgeId e = 0; e < static_cast<EdgeId>(tree.num_edges()); ++e) {
      const int a = prev[static_cast<std::size_t>(tree.edge(e).u)];
      const int b = prev[static_cast<std::size_t>(tree.edge(e).v)];
      if (a == b) continue;
      adj[static_cast<std::size_t>(a)].push_back({b, e});
      adj[static_cast<std::size_t>(b)].push_back({a, e});
    }

    std::vector<int> cluster(units, -1);
    std::vector<char> stranded(units, 0), core(units, 0);
    int count = 0;
    std::vector<int> order;
    std::vector<char> seen(units, 0);
    for (std::size_t s = 0; s < units; ++s) {
      if (cluster[s] != -1 || stranded[s]) continue;
      // breadth-first over unclustered units until the size threshold is met
      order.assign(1, static_cast<int>(s));
      seen[s] = 1;
      std::size_t total = 0, reached = 0;
      bool enough = false;
      for (std::size_t head = 0; head < order.size(); ++head) {
        const int x = order[head];
        total += prev_size[static_cast<std::size_t>(x)];
        if (Ratio(static_cast<std::int64_t>(total)) >= threshold) {
          enough = true;
          reached = head + 1;
          break;
        }
        for (auto [y, e] : adj[static_cast<std::size_t>(x)]) {
          (void)e;
          if (cluster[static_cast<std::size_t>(y)] == -1 && !seen[static_cast<std::size_t>(y)]) {
            seen[static_cast<std::size_t>(y)] = 1;
            order.push_back(y);
          }
        }
      }
      for (int x : order) seen[static_cast<std::size_t>(x)] = 0;
      if (enough) {
        for (std::size_t j = 0; j < reached; ++j) {
          cluster[static_cast<std::size_t>(order[j])] = count;
          core[static_cast<std::size_t>(order[j])] = 1;
        }
        ++count;
      } else {
        // every unit reached here can only see fewer free units later
        for (int x : order) stranded[static_cast<std::size_t>(x)] = 1;
      }
    }

    // leftover pieces: maximal connected sets of unclustered units
    bool undersized = false;
    std::vector<int> piece;
    std::vector<int> attach(units, -1);
    for (std::size_t s = 0; s < units; ++s) {
      if (cluster[s] != -1 || attach[s] != -1) continue;
      piece.assign(1, static_cast<int>(s));
      attach[s] = 0;
      EdgeId best_edge = -1;
      int best_cluster = -1;
      for (std::size_t head = 0; head < piece.size(); ++head) {
        const int x = piece[head];
        for (auto [y, e] : adj[static_cast<std::size_t>(x)]) {
          const int cy = cluster[static_cast<std::size_t>(y)];
          if (cy != -1 && core[static_cast<std::size_t>(y)]) {
            if (best_edge == -1 || e < best_edge) {
              best_edge = e;
              best_cluster = cy;
            }
          } else if (cy == -1 && attach[static_cast<std::size_t>(y)] == -1) {
            attach[static_cast<std::size_t>(y)] = 0;
            piece.push_back(y);
          }
        }
      }
      if (best_cluster == -1) {
        best_cluster = count++;
        undersized = true;
      }
      for (int x : piece) cluster[static_cast<std::size_t>(x)] = best_cluster;
    }

    ClusterLevel lvl;
    lvl.level = i;
    lvl.threshold = threshold;
    lvl.count = count;
    lvl.undersized = undersized;
    lvl.of.resize(n);
    lvl.core.resize(n);
    lvl.size.assign(static_cast<std::size_t>(count), 0);
    for (std::size_t v = 0; v < n; ++v) {
      const auto u = static_cast<std::size_t>(prev[v]);
      lvl.of[v] = cluster[u];
      lvl.core[v] = core[u];
      ++lvl.size[static_cast<std::size_t>(cluster[u])];
    }
    prev = lvl.of;
    prev_size = lvl.size;
    prev_count = count;
    h.levels.push_back(std::move(lvl));
  }
  return h;
}

Ratio framework_stretch(const FrameworkConfig& cfg) {
  const Ratio one(1);
  return max((one + cfg.eps) * (one + Ratio(8) * cfg.eps) * cfg.bounded.stretch, cfg.light.stretch);
}

namespace {

SpannerResult framework_connected(const WeightedGraph& g, const FrameworkConfig& cfg, FrameworkTrace* trace) {
  const std::size_t n = g.num_vertices();
  const Ratio claimed = framework_stretch(cfg);
  std::vector<EdgeId> tree = mst(g);
  if (tree.size() == g.num_edges()) return SpannerResult(tree, Ratio(1));

  i128 tree_weight = 0;
  std::vector<char> in_tree(g.num_edges(), 0);
  for (EdgeId e : tree) {
    tree_weight += g.edge(e).w;
    in_tree[static_cast<std::size_t>(e)] = 1;
  }
  const auto links = static_cast<i128>(n - 1);
  // rounded weight in units of w' = tree_weight / (n-1)
  auto units_of = [&](Weight w) -> std::int64_t {
    const i128 num = static_cast<i128>(w) * links;
    return static_cast<std::int64_t>((num + tree_weight - 1) / tree_weight);
  };

  // light edges: w <= w'/eps
  std::vector<EdgeId> light, heavy;
  for (EdgeId e = 0; e < static_cast<EdgeId>(g.num_edges()); ++e) {
    if (in_tree[static_cast<std::size_t>(e)]) continue;
    const i128 lhs = static_cast<i128>(g.edge(e).w) * links * cfg.eps.num;
    if (lhs <= tree_weight * cfg.eps.den)
      light.push_back(e);
    else
      heavy.push_back(e);
  }

  std::vector<EdgeId> kept = tree;
  if (!light.empty()) {
    WeightedGraph part = subgraph(g, light);
    SpannerResult r = run_per_component(part, cfg.light.run);
    auto lifted = lift_edges(light, r.edges);
    kept = merge_edges(std::move(kept), lifted);
    if (trace) trace->light_kept = lifted.size();
  }
  if (trace) {
    trace->unit = Ratio(1);
    if (tree_weight <= std::numeric_limits<std::int64_t>::max())
      trace->unit = Ratio(static_cast<std::int64_t>(tree_weight), static_cast<std::int64_t>(n - 1));
    trace->light_edges = light.size();
  }

  // subdivided tree: MST edge of rounded weight q becomes q unit pieces
  std::vector<Edge> g1;
  std::size_t total = n;
  for (EdgeId e : tree) {
    const Edge& x = g.edge(e);
    const std::int64_t q = units_of(x.w);
    Vertex at = x.u;
    for (std::int64_t p = 1; p < q; ++p) {
      const auto mid = static_cast<Vertex>(total++);
      g1.push_back({at, mid, units(1)});
      at = mid;
    }
    g1.push_back({at, x.v, units(1)});
  }
  const std::size_t tree_edges = g1.size();
  WeightedGraph t1(total, g1);
  if (trace) trace->subdivision_vertices = total - n;

  std::vector<std::int64_t> q_heavy(heavy.size());
  std::int64_t q_max = 1;
  for (std::size_t j = 0; j < heavy.size(); ++j) {
    q_heavy[j] = units_of(g.edge(heavy[j]).w);
    q_max = std::max(q_max, q_heavy[j]);
  }
  // levels: bucket i holds rounded weights in [g^(ik), g^((i+1)k))
  std::vector<std::int64_t> base{1};
  std::int64_t step = 1;
  for (int j = 0; j < cfg.k; ++j) step *= cfg.g;
  while (base.back() <= q_max / step) base.push_back(base.back() * step);
  const int top = static_cast<int>(base.size()) - 1;
  std::vector<std::vector<std::size_t>> bucket(base.size());
  for (std::size_t j = 0; j < heavy.size(); ++j) {
    int i = top;
    while (base[static_cast<std::size_t>(i)] > q_heavy[j]) --i;
    bucket[static_cast<std::size_t>(i)].push_back(j);
  }

  ClusterHierarchy hier = build_clustering(t1, cfg.k, cfg.g, cfg.eps, top);

  // one host graph holding the unit tree and every heavy edge at rounded weight
  for (std::size_t j = 0; j < heavy.size(); ++j) {
    const Edge& x = g.edge(heavy[j]);
    g1.push_back({x.u, x.v, units(q_heavy[j])});
  }
  WeightedGraph host(total, g1);
  std::vector<EdgeId> tree_ids(tree_edges);
  std::iota(tree_ids.begin(), tree_ids.end(), 0);

  for (int i = 0; i <= top; ++i) {
    const auto& lvl = hier.levels[static_cast<std::size_t>(i)];
    const auto& items = bucket[static_cast<std::size_t>(i)];
    FrameworkLevelTrace lt;
    lt.level = i;
    lt.clusters = static_cast<std::size_t>(lvl.count);
    lt.bucket_edges = items.size();
    if (!items.empty()) {
      std::vector<EdgeId> ids = tree_ids;
      for (std::size_t j : items) ids.push_back(static_cast<EdgeId>(tree_edges + j));
      const std::int64_t scale = base[static_cast<std::size_t>(i)];
      Contraction c = contract(host, lvl.of, lvl.count, ids, [&](EdgeId e) -> Weight {
        if (static_cast<std::size_t>(e) < tree_edges) return units(1);
        const i128 ticks = static_cast<i128>(host.edge(e).w);
        return static_cast<Weight>((ticks + scale - 1) / scale);
      });
      lt.level_graph_edges = c.graph.num_edges();
      SpannerResult r = cfg.bounded.run(c.graph);
      std::vector<EdgeId> mapped;
      for (EdgeId e : r.edges) {
        const EdgeId rep = c.representative[static_cast<std::size_t>(e)];
        if (static_cast<std::size_t>(rep) >= tree_edges)
          mapped.push_back(heavy[static_cast<std::size_t>(rep) - tree_edges]);
      }
      lt.kept = mapped.size();
      std::sort(mapped.begin(), mapped.end());
      kept = merge_edges(std::move(kept), mapped);
    }
    if (trace) trace->levels.push_back(lt);
  }
  if (trace) trace->hierarchy = std::move(hier);
  return SpannerResult(std::move(kept), claimed);
}

}  // namespace

SpannerResult framework_run(const WeightedGraph& g, const FrameworkConfig& cfg, FrameworkTrace* trace) {
  if (cfg.k < 1 || cfg.g < 2) throw PreconditionError("framework needs k >= 1 and g >= 2");
  if (cfg.eps <= Ratio(0) || cfg.eps > Ratio(1)) throw PreconditionError("framework needs 0 < eps <= 1");
  std::int64_t step = 1;
  for (int j = 0; j < cfg.k && step < 4; ++j) step *= cfg.g;
  if (step < 4) throw PreconditionError("framework needs g^k >= 4");
  if (!cfg.bounded.run || !cfg.light.run) throw PreconditionError("framework needs both algorithms");
  SpannerResult r = run_per_component(g, [&](const WeightedGraph& part) {
    if (trace) *trace = FrameworkTrace{};
    return framework_connected(part, cfg, trace);
  });
  r.claimed_stretch = framework_stretch(cfg);
  return r;
}

}  // namespace spanwright
