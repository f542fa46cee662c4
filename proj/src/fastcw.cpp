#include "spanwright/fastcw.hpp"

#include <algorithm>
#include <tuple>

#include "spanwright/clustering.hpp"
#include "spanwright/metrics.hpp"
#include "spanwright/sparse.hpp"

namespace spanwright {

namespace {

__extension__ typedef __int128 i128;

constexpr std::int64_t kCap = std::int64_t{1} << 62;

std::int64_t sat_mul(std::int64_t a, std::int64_t b) {
  const i128 p = static_cast<i128>(a) * b;
  return p > kCap ? kCap : static_cast<std::int64_t>(p);
}

std::int64_t sat_pow(std::int64_t base, int e) {
  std::int64_t r = 1;
  for (int j = 0; j < e && r < kCap; ++j) r = sat_mul(r, base);
  return r;
}

Weight units_sat(std::int64_t whole) { return whole >= kInfinity / kWeightScale ? kInfinity : units(whole); }

std::size_t idx(int x) { return static_cast<std::size_t>(x); }

void validate(const FastCwConfig& cfg) {
  if (cfg.k < 1) throw PreconditionError("fastcw needs k >= 1");
  if (cfg.eps <= Ratio(0) || cfg.eps > Ratio(1)) throw PreconditionError("fastcw needs 0 < eps <= 1");
  if (cfg.g < 2 || cfg.c < 1 || cfg.d < 1 || cfg.mu < 0) throw PreconditionError("fastcw constants out of range");
  if (cfg.strict) {
    if (cfg.g != 20 || cfg.c != 24 || cfg.d != 160) throw PreconditionError("strict mode uses g=20, c=24, d=160");
    if (cfg.k < 640) throw PreconditionError("strict mode needs k >= 640");
  }
}

// Adjacency between nodes: (neighbour, edge) lists.
using NodeAdj = std::vector<std::vector<std::pair<int, EdgeId>>>;

// Keeps one edge per node pair, the first under `better`, and builds adjacency
// in that edge order.
template <class Less>
NodeAdj node_graph(const WeightedGraph& g, const std::vector<int>& of, int nodes, const std::vector<EdgeId>& ids,
                   Less better) {
  std::vector<std::tuple<int, int, EdgeId>> items;
  for (EdgeId e : ids) {
    int a = of[idx(g.edge(e).u)], b = of[idx(g.edge(e).v)];
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    items.emplace_back(a, b, e);
  }
  std::sort(items.begin(), items.end(), [&](const auto& x, const auto& y) {
    if (std::get<0>(x) != std::get<0>(y)) return std::get<0>(x) < std::get<0>(y);
    if (std::get<1>(x) != std::get<1>(y)) return std::get<1>(x) < std::get<1>(y);
    return better(std::get<2>(x), std::get<2>(y));
  });
  std::vector<std::tuple<int, int, EdgeId>> kept;
  for (const auto& t : items)
    if (kept.empty() || std::get<0>(kept.back()) != std::get<0>(t) || std::get<1>(kept.back()) != std::get<1>(t))
      kept.push_back(t);
  std::sort(kept.begin(), kept.end(),
            [&](const auto& x, const auto& y) { return better(std::get<2>(x), std::get<2>(y)); });
  NodeAdj adj(idx(nodes));
  for (const auto& [a, b, e] : kept) {
    adj[idx(a)].push_back({b, e});
    adj[idx(b)].push_back({a, e});
  }
  return adj;
}

// Grouping of the nodes of one level into clusters.
struct Grouping {
  std::vector<int> of;       // per node, -1 while unassigned
  std::vector<char> core;    // per node
  int count = 0;
  std::vector<char> heavy;   // per cluster
  std::vector<int> origin;
  std::vector<int> origin_degree;
  std::vector<EdgeId> created;
  bool undersized = false;

  int open(bool is_heavy, int from, int degree) {
    heavy.push_back(is_heavy);
    origin.push_back(from);
    origin_degree.push_back(degree);
    return count++;
  }
};

// Grows clusters of at least `need` vertices over the unassigned nodes along
// tree adjacency, then hangs each leftover piece on a core through its
// lowest-id tree edge.
void grow_light(const NodeAdj& tree, const std::vector<std::int64_t>& weight, std::int64_t need, Grouping& grp) {
  const std::size_t nodes = tree.size();
  std::vector<char> stranded(nodes, 0), queued(nodes, 0);
  struct Piece {
    std::vector<int> members;
    std::vector<EdgeId> edges;
  };
  std::vector<Piece> pieces;
  for (std::size_t s = 0; s < nodes; ++s) {
    if (grp.of[s] != -1 || stranded[s]) continue;
    Piece p;
    p.members.push_back(static_cast<int>(s));
    queued[s] = 1;
    std::int64_t total = weight[s];
    for (std::size_t head = 0; head < p.members.size() && total < need; ++head) {
      for (auto [y, e] : tree[idx(p.members[head])]) {
        if (grp.of[idx(y)] != -1 || stranded[idx(y)] || queued[idx(y)]) continue;
        queued[idx(y)] = 1;
        p.members.push_back(y);
        p.edges.push_back(e);
        total += weight[idx(y)];
        if (total >= need) break;
      }
    }
    for (int x : p.members) queued[idx(x)] = 0;
    if (total >= need) {
      const int id = grp.open(false, -1, 0);
      for (int x : p.members) {
        grp.of[idx(x)] = id;
        grp.core[idx(x)] = 1;
      }
      grp.created.insert(grp.created.end(), p.edges.begin(), p.edges.end());
    } else {
      for (int x : p.members) stranded[idx(x)] = 1;
      pieces.push_back(std::move(p));
    }
  }
  for (Piece& p : pieces) {
    EdgeId best = -1;
    int target = -1;
    bool touches = false;
    for (int x : p.members)
      for (auto [y, e] : tree[idx(x)]) {
        if (stranded[idx(y)]) continue;
        touches = true;
        if (grp.core[idx(y)] && (best == -1 || e < best)) {
          best = e;
          target = grp.of[idx(y)];
        }
      }
    if (best == -1) {
      // pieces are maximal, so every outside tree neighbour is a core node
      if (touches) throw Error("stranded piece has no neighbouring core");
      target = grp.open(false, -1, 0);
      grp.undersized = true;
    } else {
      grp.created.push_back(best);
    }
    for (int x : p.members) grp.of[idx(x)] = target;
    grp.created.insert(grp.created.end(), p.edges.begin(), p.edges.end());
  }
}

FastCwLevel make_level(int level, std::int64_t need, const std::vector<int>& node_of, const Grouping& grp) {
  FastCwLevel lvl;
  lvl.level = level;
  lvl.min_size = need;
  lvl.count = grp.count;
  lvl.of.resize(node_of.size());
  lvl.core.resize(node_of.size());
  lvl.size.assign(idx(grp.count), 0);
  for (std::size_t v = 0; v < node_of.size(); ++v) {
    const int node = node_of[v];
    lvl.of[v] = grp.of[idx(node)];
    lvl.core[v] = grp.core[idx(node)];
    ++lvl.size[idx(lvl.of[v])];
  }
  lvl.heavy = grp.heavy;
  lvl.origin = grp.origin;
  lvl.origin_degree = grp.origin_degree;
  lvl.heavy_count = static_cast<std::size_t>(std::count(grp.heavy.begin(), grp.heavy.end(), 1));
  lvl.created = grp.created;
  std::sort(lvl.created.begin(), lvl.created.end());
  lvl.undersized = grp.undersized;
  return lvl;
}

// Weight class of every edge: largest i <= k-1 with w >= g^i units.
std::vector<int> weight_classes(const WeightedGraph& g, const FastCwConfig& cfg) {
  std::vector<int> cls(g.num_edges(), 0);
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    const Weight w = g.edge(static_cast<EdgeId>(e)).w;
    int i = 0;
    while (i + 1 < cfg.k && units_sat(sat_pow(cfg.g, i + 1)) <= w) ++i;
    cls[e] = i;
  }
  return cls;
}

void check_input(const WeightedGraph& g, const FastCwConfig& cfg, const std::vector<EdgeId>& tree) {
  validate(cfg);
  for (EdgeId e : tree)
    if (g.edge(e).w != units(1)) throw PreconditionError("fastcw needs unit-weight MST edges");
  if (g.num_edges() > 0 && g.max_weight() > units_sat(sat_pow(cfg.g, cfg.k)))
    throw PreconditionError("fastcw needs weights at most g^k");
}

FastCwPhase1 phase1(const WeightedGraph& g, const FastCwConfig& cfg, const std::vector<EdgeId>& tree,
                    const std::vector<int>& cls) {
  const std::size_t n = g.num_vertices();
  const auto by_id = [](EdgeId a, EdgeId b) { return a < b; };
  const auto by_weight = [&](EdgeId a, EdgeId b) {
    return std::make_pair(g.edge(a).w, a) < std::make_pair(g.edge(b).w, b);
  };
  std::vector<std::vector<EdgeId>> bucket(idx(cfg.k));
  std::vector<char> in_tree(g.num_edges(), 0), in_sp(g.num_edges(), 0);
  for (EdgeId e : tree) in_tree[idx(e)] = in_sp[idx(e)] = 1;
  for (std::size_t e = 0; e < g.num_edges(); ++e)
    if (!in_tree[e]) bucket[idx(cls[e])].push_back(static_cast<EdgeId>(e));

  const auto need_at = [&](int i) {
    const std::int64_t top = sat_mul(cfg.k, sat_pow(cfg.g, i));
    return (top + cfg.c - 1) / cfg.c;
  };

  FastCwPhase1 out;
  // level 0: light clusters over single vertices
  {
    std::vector<int> self(n);
    for (std::size_t v = 0; v < n; ++v) self[v] = static_cast<int>(v);
    Grouping grp;
    grp.of.assign(n, -1);
    grp.core.assign(n, 0);
    grow_light(node_graph(g, self, static_cast<int>(n), tree, by_id), std::vector<std::int64_t>(n, 1), need_at(0),
               grp);
    out.levels.push_back(make_level(0, need_at(0), self, grp));
  }

  for (int i = 1; i < cfg.k; ++i) {
    const FastCwLevel& prev = out.levels.back();
    const int nodes = prev.count;
    NodeAdj contracted = node_graph(g, prev.of, nodes, bucket[idx(i)], by_weight);
    Grouping grp;
    grp.of.assign(idx(nodes), -1);
    grp.core.assign(idx(nodes), 0);
    std::size_t added = 0;
    const auto add = [&](EdgeId e) {
      if (!in_sp[idx(e)]) {
        in_sp[idx(e)] = 1;
        ++added;
      }
    };

    // heavy clusters around high-degree nodes whose neighbourhood is untouched
    std::vector<char> marked(idx(nodes), 0);
    for (int x = 0; x < nodes; ++x) {
      const auto& nb = contracted[idx(x)];
      if (static_cast<int>(nb.size()) < cfg.d || marked[idx(x)]) continue;
      if (std::any_of(nb.begin(), nb.end(), [&](const auto& p) { return marked[idx(p.first)]; })) continue;
      const int id = grp.open(true, x, static_cast<int>(nb.size()));
      marked[idx(x)] = 1;
      grp.of[idx(x)] = id;
      for (auto [y, e] : nb) {
        marked[idx(y)] = 1;
        grp.of[idx(y)] = id;
        add(e);
        grp.created.push_back(e);
      }
    }
    // remaining high-degree nodes join a neighbouring heavy cluster
    for (int x = 0; x < nodes; ++x) {
      const auto& nb = contracted[idx(x)];
      if (static_cast<int>(nb.size()) < cfg.d || marked[idx(x)]) continue;
      auto hit = std::find_if(nb.begin(), nb.end(), [&](const auto& p) { return marked[idx(p.first)] != 0; });
      if (hit == nb.end()) throw Error("high-degree node without a marked neighbour");
      grp.of[idx(x)] = grp.of[idx(hit->first)];
      add(hit->second);
      grp.created.push_back(hit->second);
    }
    for (int x = 0; x < nodes; ++x)
      if (grp.of[idx(x)] != -1) grp.core[idx(x)] = 1;

    // everything else keeps all its edges and is grouped along the tree
    for (int x = 0; x < nodes; ++x)
      if (grp.of[idx(x)] == -1)
        for (auto [y, e] : contracted[idx(x)]) add(e);
    std::vector<std::int64_t> weight(idx(nodes));
    for (int x = 0; x < nodes; ++x) weight[idx(x)] = static_cast<std::int64_t>(prev.size[idx(x)]);
    grow_light(node_graph(g, prev.of, nodes, tree, by_id), weight, need_at(i), grp);

    FastCwLevel lvl = make_level(i, need_at(i), prev.of, grp);
    lvl.edges_added = added;
    out.levels.push_back(std::move(lvl));
  }
  for (std::size_t e = 0; e < g.num_edges(); ++e)
    if (in_sp[e]) out.edges.push_back(static_cast<EdgeId>(e));
  return out;
}

SpannerResult core_connected(const WeightedGraph& g, const FastCwConfig& cfg, FastCwTrace* trace) {
  const std::vector<EdgeId> tree = mst(g);
  check_input(g, cfg, tree);
  const std::vector<int> cls = weight_classes(g, cfg);
  const int k = cfg.k;
  const int mu = fastcw_mu(cfg);
  FastCwPhase1 p1 = phase1(g, cfg, tree, cls);
  std::vector<EdgeId> kept = p1.edges;

  // round 0: every edge of weight at most g^mu
  const Weight base_cap = units_sat(sat_pow(cfg.g, mu));
  std::vector<EdgeId> base;
  for (std::size_t e = 0; e < g.num_edges(); ++e)
    if (g.edge(static_cast<EdgeId>(e)).w <= base_cap) base.push_back(static_cast<EdgeId>(e));
  std::vector<EdgeId> h0 = lift_edges(base, aspect_spanner(subgraph(g, base), k, cfg.eps).edges);
  kept = merge_edges(std::move(kept), h0);
  if (trace) {
    trace->mu = mu;
    trace->base_edges = base.size();
    trace->base_kept = h0.size();
    trace->rounds.clear();
  }

  const int rounds = (k + mu - 1) / mu;
  for (int r = 1; r < rounds; ++r) {
    const int lo = (r - 1) * mu;
    const int hi = std::min((r + 1) * mu, k);  // exclusive
    const FastCwLevel& base_level = p1.levels[idx(lo)];

    // clusters of level lo lying in a heavy cluster of some level in [r mu, hi)
    std::vector<char> inside(idx(base_level.count), 0);
    for (std::size_t v = 0; v < g.num_vertices(); ++v)
      for (int h = std::max(r * mu, 1); h < hi; ++h) {
        const FastCwLevel& lvl = p1.levels[idx(h)];
        if (lvl.heavy[idx(lvl.of[v])]) inside[idx(base_level.of[v])] = 1;
      }
    const auto vertices = static_cast<std::size_t>(std::count(inside.begin(), inside.end(), 1));
    if (vertices == 0) continue;

    std::vector<EdgeId> offered;
    std::size_t created = 0;
    for (int h = lo + 1; h <= std::min((r + 1) * mu, k - 1); ++h) {
      const auto& c = p1.levels[idx(h)].created;
      offered.insert(offered.end(), c.begin(), c.end());
      created += c.size();
    }
    for (std::size_t e = 0; e < g.num_edges(); ++e)
      if (cls[e] >= lo && cls[e] < hi) offered.push_back(static_cast<EdgeId>(e));
    std::sort(offered.begin(), offered.end());
    offered.erase(std::unique(offered.begin(), offered.end()), offered.end());
    std::vector<EdgeId> ids;
    for (EdgeId e : offered) {
      const int a = base_level.of[idx(g.edge(e).u)], b = base_level.of[idx(g.edge(e).v)];
      if (a != b && inside[idx(a)] && inside[idx(b)]) ids.push_back(e);
    }

    const Weight floor_w = scale_up(Ratio(k) / cfg.eps, units_sat(sat_pow(cfg.g, lo)));
    Contraction cg = contract(g, base_level.of, base_level.count, ids,
                              [&](EdgeId e) { return std::max(g.edge(e).w, floor_w); });
    SpannerResult hr = aspect_spanner(cg.graph, k, cfg.eps);
    std::vector<EdgeId> mapped;
    for (EdgeId e : hr.edges) mapped.push_back(cg.representative[idx(e)]);
    std::sort(mapped.begin(), mapped.end());
    kept = merge_edges(std::move(kept), mapped);
    if (trace) {
      FastCwRound rt;
      rt.r = r;
      rt.vertices = vertices;
      rt.created_edges = created;
      rt.graph_edges = cg.graph.num_edges();
      rt.floor_weight = floor_w;
      rt.msf_weight = mst_weight(cg.graph);
      rt.kept = mapped.size();
      trace->rounds.push_back(rt);
    }
  }
  if (trace) trace->phase1 = std::move(p1);
  return SpannerResult(std::move(kept), fastcw_stretch(cfg));
}

}  // namespace

FastCwConfig FastCwConfig::test_mode(int k, Ratio eps) {
  FastCwConfig cfg;
  cfg.k = k;
  cfg.eps = eps;
  cfg.g = 3;
  cfg.c = 4;
  cfg.d = 3;
  cfg.strict = false;
  return cfg;
}

int fastcw_mu(const FastCwConfig& cfg) {
  if (cfg.mu > 0) return cfg.mu;
  // smallest mu >= 1 with g^mu * eps >= k
  int mu = 1;
  std::int64_t p = cfg.g;
  while (static_cast<i128>(p) * cfg.eps.num < static_cast<i128>(cfg.k) * cfg.eps.den) {
    p = sat_mul(p, cfg.g);
    ++mu;
  }
  return mu;
}

Ratio fastcw_stretch(const FastCwConfig& cfg) {
  return Ratio(2 * cfg.k - 1) * (Ratio(1) + Ratio(5) * cfg.eps);
}

FastCwPhase1 fastcw_phase1(const WeightedGraph& g, const FastCwConfig& cfg) {
  const std::vector<EdgeId> tree = mst(g);
  check_input(g, cfg, tree);
  return phase1(g, cfg, tree, weight_classes(g, cfg));
}

SpannerResult fastcw_core(const WeightedGraph& g, const FastCwConfig& cfg, FastCwTrace* trace) {
  validate(cfg);
  if (is_connected(g) || g.num_vertices() == 0) return core_connected(g, cfg, trace);
  SpannerResult r = run_per_component(g, [&](const WeightedGraph& part) { return core_connected(part, cfg, trace); });
  r.claimed_stretch = fastcw_stretch(cfg);
  return r;
}

SpannerResult fastcw_full(const WeightedGraph& g, const FastCwConfig& cfg) {
  validate(cfg);
  FastCwConfig inner = cfg;
  inner.eps = cfg.eps / Ratio(2);
  FrameworkConfig fw;
  fw.k = cfg.k;
  fw.g = cfg.g;
  fw.eps = cfg.eps / Ratio(16);
  fw.bounded = {"fastcw", fastcw_stretch(inner),
                [inner](const WeightedGraph& part) { return fastcw_core(part, inner); }};
  const int k = cfg.k;
  const Ratio eps = cfg.eps;
  fw.light = {"sparse", Ratio(2 * k - 1) * (Ratio(1) + Ratio(2) * eps),
              [k, eps](const WeightedGraph& part) { return sparse_spanner(part, k, eps).spanner; }};
  SpannerResult r = framework_run(g, fw);
  r.claimed_stretch = fastcw_stretch(cfg);
  return r;
}

std::vector<Weight> fastcw_cluster_diameters(const WeightedGraph& g, std::span<const EdgeId> spanner,
                                             const FastCwLevel& level) {
  std::vector<EdgeId> inner;
  for (EdgeId e : spanner)
    if (level.of[idx(g.edge(e).u)] == level.of[idx(g.edge(e).v)]) inner.push_back(e);
  const WeightedGraph h = subgraph(g, inner);
  std::vector<Weight> diam(idx(level.count), 0);
  for (std::size_t s = 0; s < g.num_vertices(); ++s) {
    if (level.size[idx(level.of[s])] == 1) continue;
    const auto dist = dijkstra(h, static_cast<Vertex>(s));
    Weight& d = diam[idx(level.of[s])];
    for (std::size_t v = 0; v < g.num_vertices(); ++v)
      if (level.of[v] == level.of[s]) d = std::max(d, dist[v]);
  }
  return diam;
}

}  // namespace spanwright
