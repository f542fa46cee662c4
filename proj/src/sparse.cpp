#include "spanwright/sparse.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "spanwright/hz.hpp"
#include "spanwright/metrics.hpp"

namespace spanwright {

namespace {

// floor(log_rho(ratio)) with the float estimate corrected against pow.
int bucket_of(double ratio, double rho) {
  int i = static_cast<int>(std::floor(std::log(ratio) / std::log(rho)));
  while (std::pow(rho, i + 1) <= ratio) ++i;
  while (i > 0 && std::pow(rho, i) > ratio) --i;
  return std::max(i, 0);
}

// Splits one connected component of singleton cluster nodes into pieces of at
// least k nodes and hop diameter at most 2k-2 along a BFS tree. Returns the
// piece index of each node in `members` (same order).
std::vector<int> chunk_component(const WeightedGraph& cg, const std::vector<Vertex>& members,
                                 const std::vector<bool>& is_single, int k,
                                 std::vector<int>& local_index) {
  const std::size_t c = members.size();
  std::vector<int> piece(c, -1);
  if (static_cast<int>(c) < k) {
    std::fill(piece.begin(), piece.end(), 0);
    return piece;
  }
  for (std::size_t i = 0; i < c; ++i) local_index[members[i]] = static_cast<int>(i);

  // BFS tree from the lowest id (members are sorted).
  std::vector<int> parent(c, -1), order{0};
  std::vector<bool> seen(c, false);
  seen[0] = true;
  for (std::size_t h = 0; h < order.size(); ++h) {
    Vertex x = members[static_cast<std::size_t>(order[h])];
    for (auto [y, e] : cg.neighbors(x)) {
      if (!is_single[y]) continue;
      int ly = local_index[y];
      if (seen[static_cast<std::size_t>(ly)]) continue;
      seen[static_cast<std::size_t>(ly)] = true;
      parent[static_cast<std::size_t>(ly)] = order[h];
      order.push_back(ly);
    }
  }

  std::vector<std::vector<int>> pending(c);
  std::vector<int> cut_child(c, -1);  // some child whose subtree was cut into a piece
  int pieces = 0;
  for (std::size_t h = order.size(); h-- > 0;) {
    int x = order[h];
    pending[static_cast<std::size_t>(x)].push_back(x);
    if (static_cast<int>(pending[static_cast<std::size_t>(x)].size()) >= k) {
      for (int y : pending[static_cast<std::size_t>(x)]) piece[static_cast<std::size_t>(y)] = pieces;
      ++pieces;
      pending[static_cast<std::size_t>(x)].clear();
      if (parent[static_cast<std::size_t>(x)] >= 0) cut_child[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])] = x;
    } else if (parent[static_cast<std::size_t>(x)] >= 0) {
      auto& up = pending[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      up.insert(up.end(), pending[static_cast<std::size_t>(x)].begin(), pending[static_cast<std::size_t>(x)].end());
      pending[static_cast<std::size_t>(x)].clear();
    }
  }
  const auto& rest = pending[0];
  if (!rest.empty()) {
    int target = -1;
    for (int y : rest)
      if (cut_child[static_cast<std::size_t>(y)] >= 0) {
        target = piece[static_cast<std::size_t>(cut_child[static_cast<std::size_t>(y)])];
        break;
      }
    for (int y : rest) piece[static_cast<std::size_t>(y)] = target;
  }
  return piece;
}

}  // namespace

int sparse_period(int k, Ratio eps) {
  if (k < 2) return 1;
  const double rho = 1.0 + eps.value();
  const double lnk = std::log(static_cast<double>(k));
  const double need = std::log(18.0 * k / eps.value()) / std::log(rho);
  double cl = std::ceil(need / lnk - 1e-12);
  return static_cast<int>(std::ceil(cl * lnk - 1e-12));
}

SparseResult sparse_spanner(const WeightedGraph& g, int k, Ratio eps, const SparseOptions& options) {
  if (k < 1) throw PreconditionError("k must be at least 1");
  if (eps.num <= 0 || eps > Ratio(1)) throw PreconditionError("eps must be in (0, 1]");
  SparseResult out;
  const std::size_t n = g.num_vertices();
  std::vector<EdgeId> tree = mst(g);
  if (g.num_edges() == 0 || k == 1) {
    std::vector<EdgeId> all(g.num_edges());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<EdgeId>(i);
    out.spanner = SpannerResult(std::move(all), Ratio(1));
    out.period = 1;
    return out;
  }

  const double rho = 1.0 + eps.value();
  const double a = static_cast<double>(g.min_weight());
  const int period = sparse_period(k, eps);
  out.period = period;
  std::vector<int> bucket(g.num_edges());
  int top = 0;
  std::map<int, std::vector<EdgeId>> by_bucket;
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    bucket[e] = bucket_of(static_cast<double>(g.edge(static_cast<EdgeId>(e)).w) / a, rho);
    top = std::max(top, bucket[e]);
    by_bucket[bucket[e]].push_back(static_cast<EdgeId>(e));
  }
  const double base = hz_growth_base(n, k);
  out.class_edges.resize(static_cast<std::size_t>(period));

  std::vector<int> local_index(n, -1);
  for (int j = 0; j < period && j <= top; ++j) {
    auto& hj = out.class_edges[static_cast<std::size_t>(j)];
    std::vector<int> cluster_of(n);
    for (std::size_t v = 0; v < n; ++v) cluster_of[v] = static_cast<int>(v);
    int clusters = static_cast<int>(n);

    for (int i = 0; j + i * period <= top; ++i) {
      const int b = j + i * period;
      if (options.record_clusters) {
        SparseClusterSnapshot snap;
        snap.weight_class = j;
        snap.level = i;
        snap.partial_edges = hj.size();
        snap.diameter_bound = 0.5 * eps.value() * std::pow(rho, b) * a;
        snap.clusters.resize(static_cast<std::size_t>(clusters));
        for (std::size_t v = 0; v < n; ++v) snap.clusters[static_cast<std::size_t>(cluster_of[v])].push_back(static_cast<Vertex>(v));
        out.snapshots.push_back(std::move(snap));
      }

      SparseLevelTrace tr;
      tr.weight_class = j;
      tr.level = i;
      tr.bucket = b;
      tr.clusters = static_cast<std::size_t>(clusters);
      tr.potential_before = 2.0 * clusters * base;

      auto it = by_bucket.find(b);
      if (it == by_bucket.end()) {
        tr.next_clusters = tr.clusters;
        tr.potential_after = tr.potential_before;
        out.trace.push_back(tr);
        continue;
      }
      Contraction cg = contract(g, cluster_of, clusters, it->second);
      HzResult hz = modified_hz_spanner(cg.graph, k, n);
      for (EdgeId e : hz.spanner.edges) hj.push_back(cg.representative[static_cast<std::size_t>(e)]);
      tr.edges_added = hz.spanner.size();

      std::vector<int> next(static_cast<std::size_t>(clusters), -1);
      std::vector<bool> is_single(static_cast<std::size_t>(clusters), false);
      int next_count = 0;
      for (const HzStep& s : hz.steps) {
        if (s.removed.size() > 1) {
          for (Vertex x : s.removed) next[static_cast<std::size_t>(x)] = next_count;
          ++next_count;
        } else {
          is_single[static_cast<std::size_t>(s.removed.front())] = true;
        }
      }
      // Components of the singleton part, chunked.
      std::vector<bool> done(static_cast<std::size_t>(clusters), false);
      for (int s = 0; s < clusters; ++s) {
        if (!is_single[static_cast<std::size_t>(s)] || done[static_cast<std::size_t>(s)]) continue;
        std::vector<Vertex> comp{s};
        done[static_cast<std::size_t>(s)] = true;
        for (std::size_t h = 0; h < comp.size(); ++h)
          for (auto [y, e] : cg.graph.neighbors(comp[h]))
            if (is_single[static_cast<std::size_t>(y)] && !done[static_cast<std::size_t>(y)]) {
              done[static_cast<std::size_t>(y)] = true;
              comp.push_back(y);
            }
        std::sort(comp.begin(), comp.end());
        std::vector<int> piece = chunk_component(cg.graph, comp, is_single, k, local_index);
        int most = *std::max_element(piece.begin(), piece.end());
        for (std::size_t t = 0; t < comp.size(); ++t) next[static_cast<std::size_t>(comp[t])] = next_count + piece[t];
        next_count += most + 1;
      }
      for (std::size_t v = 0; v < n; ++v) cluster_of[v] = next[static_cast<std::size_t>(cluster_of[v])];
      clusters = next_count;

      tr.next_clusters = static_cast<std::size_t>(clusters);
      tr.potential_after = 2.0 * clusters * base;
      out.trace.push_back(tr);
    }
  }

  std::vector<EdgeId> all = tree;
  for (const auto& hj : out.class_edges) all.insert(all.end(), hj.begin(), hj.end());
  const Ratio two_k_minus_one(2 * k - 1);
  out.spanner = SpannerResult(std::move(all), two_k_minus_one * (Ratio(1) + Ratio(2) * eps));
  return out;
}

DiameterCheck cluster_diameter_bound_check(const WeightedGraph& g, const SparseResult& result) {
  DiameterCheck check;
  for (const SparseClusterSnapshot& snap : result.snapshots) {
    const auto& hj = result.class_edges[static_cast<std::size_t>(snap.weight_class)];
    std::vector<EdgeId> prefix(hj.begin(), hj.begin() + static_cast<std::ptrdiff_t>(snap.partial_edges));
    bool any = false;
    for (const auto& c : snap.clusters) any = any || c.size() > 1;
    if (!any) continue;
    WeightedGraph h = subgraph(g, prefix);
    for (const auto& c : snap.clusters) {
      if (c.size() < 2) continue;
      Weight diam = 0;
      for (Vertex s : c) {
        auto d = dijkstra(h, s);
        for (Vertex t : c) diam = std::max(diam, d[t]);
      }
      double ratio = diam == kInfinity ? INFINITY : static_cast<double>(diam) / snap.diameter_bound;
      check.worst_ratio = std::max(check.worst_ratio, ratio);
      if (static_cast<double>(diam) > snap.diameter_bound * (1 + 1e-12)) check.ok = false;
    }
  }
  return check;
}

SpannerResult aspect_spanner(const WeightedGraph& g, int k, Ratio eps) {
  if (k < 1) throw PreconditionError("k must be at least 1");
  if (eps.num <= 0 || eps > Ratio(1)) throw PreconditionError("eps must be in (0, 1]");
  const Ratio claimed = Ratio(2 * k - 1) * (Ratio(1) + Ratio(2) * eps);
  const std::size_t n = g.num_vertices();
  std::vector<EdgeId> tree = mst(g);
  if (g.num_edges() == 0) return SpannerResult({}, claimed);

  const double rho = 1.0 + eps.value();
  const double a = static_cast<double>(g.min_weight());
  std::vector<bool> in_tree(g.num_edges(), false);
  for (EdgeId e : tree) in_tree[static_cast<std::size_t>(e)] = true;
  std::map<int, std::vector<EdgeId>> buckets;  // bucket j holds weights in [a rho^(j-1), a rho^j)
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    if (in_tree[e]) continue;
    int j = bucket_of(static_cast<double>(g.edge(static_cast<EdgeId>(e)).w) / a, rho) + 1;
    buckets[j].push_back(static_cast<EdgeId>(e));
  }

  // Forest adjacency for cluster growth.
  WeightedGraph forest = subgraph(g, tree);

  // Cluster state: every vertex knows its cluster and an upper bound on its
  // forest distance to the cluster's center.
  std::vector<int> cluster_of(n);
  std::vector<Weight> reach(n, 0);
  std::vector<std::vector<Vertex>> members(n);
  std::vector<Weight> radius(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    cluster_of[v] = static_cast<int>(v);
    members[v] = {static_cast<Vertex>(v)};
  }
  int clusters = static_cast<int>(n);

  std::vector<EdgeId> kept = tree;
  for (const auto& [j, edges] : buckets) {
    const auto limit = static_cast<Weight>(std::floor(eps.value() * a * std::pow(rho, j - 1) / 4.0));

    // Regrow: old clusters are merged along forest edges while the radius bound holds.
    std::vector<int> next(static_cast<std::size_t>(clusters), -1);
    std::vector<std::vector<Vertex>> next_members;
    std::vector<Weight> next_radius;
    for (int seed = 0; seed < clusters; ++seed) {
      if (next[static_cast<std::size_t>(seed)] >= 0) continue;
      const int id = static_cast<int>(next_members.size());
      next[static_cast<std::size_t>(seed)] = id;
      std::vector<Vertex> grown = members[static_cast<std::size_t>(seed)];
      Weight r = radius[static_cast<std::size_t>(seed)];
      for (std::size_t h = 0; h < grown.size(); ++h) {
        Vertex x = grown[h];
        for (auto [y, e] : forest.neighbors(x)) {
          int old = cluster_of[static_cast<std::size_t>(y)];
          if (next[static_cast<std::size_t>(old)] >= 0) continue;
          Weight w = forest.edge(e).w;
          Weight via = reach[static_cast<std::size_t>(x)] + w + reach[static_cast<std::size_t>(y)];
          Weight far = via + radius[static_cast<std::size_t>(old)];
          if (far > limit) continue;
          next[static_cast<std::size_t>(old)] = id;
          for (Vertex z : members[static_cast<std::size_t>(old)]) {
            reach[static_cast<std::size_t>(z)] += via;
            grown.push_back(z);
          }
          r = std::max(r, far);
        }
      }
      next_members.push_back(std::move(grown));
      next_radius.push_back(r);
    }
    clusters = static_cast<int>(next_members.size());
    for (int c = 0; c < clusters; ++c)
      for (Vertex z : next_members[static_cast<std::size_t>(c)]) cluster_of[static_cast<std::size_t>(z)] = c;
    members = std::move(next_members);
    radius = std::move(next_radius);

    Contraction cg = contract(g, cluster_of, clusters, edges);
    HzResult hz = hz_spanner(cg.graph, k);
    for (EdgeId e : hz.spanner.edges) kept.push_back(cg.representative[static_cast<std::size_t>(e)]);
  }
  return SpannerResult(std::move(kept), claimed);
}

}  // namespace spanwright
