#include "spanwright/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <queue>
#include <set>
#include <sstream>
#include <unordered_map>

namespace spanwright {

Ratio oracle_stretch(int k, Ratio eps) {
  return Ratio(2) * pow(Ratio(3) + Ratio(2) * eps, k - 1) - Ratio(1);
}

std::string format_event(const OracleEvent& e) {
  std::ostringstream out;
  out << (e.kind == OracleEvent::Kind::Insert ? '+' : '?') << ' ' << e.u << ' ' << e.v << ' ';
  if (e.value == kFar)
    out << '*';
  else
    out << e.value;
  return out.str();
}

OracleEvent parse_event(const std::string& line) {
  std::istringstream in(line);
  char tag = 0;
  std::string value;
  OracleEvent e;
  if (!(in >> tag >> e.u >> e.v >> value) || (tag != '+' && tag != '?'))
    throw Error("malformed oracle event: " + line);
  e.kind = tag == '+' ? OracleEvent::Kind::Insert : OracleEvent::Kind::Query;
  if (value == "*") {
    if (e.kind == OracleEvent::Kind::Insert) throw Error("insertion needs a weight: " + line);
    e.value = kFar;
  } else {
    std::size_t used = 0;
    try {
      e.value = std::stoll(value, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != value.size()) throw Error("malformed oracle event: " + line);
  }
  return e;
}

namespace {

using Vtx = std::int32_t;
constexpr int kEmptyExp = -2;  // tree with no vertices (root too heavy on its own)

struct Grid {
  // key[e + 1] = floor((1+eps)^e) for e = -1..top
  std::vector<Distance> key;
  Distance at(int e) const { return e == kEmptyExp ? -1 : key[static_cast<std::size_t>(e + 1)]; }
};

struct Tree {
  int exp = 0;
  int shrinks = 0;
  std::vector<Distance> dist;  // kFar outside the ball
  std::vector<Vtx> members;
};

struct Detour {
  Vtx via = -1;
  Distance via_dist = 0;
  int cls = 0;
};

struct Claim {
  Vtx root = -1;
  Distance dist = 0;
};

struct Level {
  std::size_t budget = 0;
  int top = 0;
  int classes = 1;
  std::vector<std::unique_ptr<Tree>> tree;
  std::vector<std::set<Vtx>> holders;
  std::vector<Vtx> pending;
  std::vector<std::vector<Claim>> claim;  // [class - 1][vertex]
  std::vector<Detour> detour;
  std::size_t roots = 0;
};

struct Output {
  Vtx root;
  int exp;
  std::vector<std::pair<Vtx, Distance>> frozen;
};

struct Probe {
  std::vector<std::pair<Vtx, Distance>> order;
  bool overflow = false;
};

int class_of(int exp) { return std::max(1, exp + 1); }

}  // namespace

struct IncrementalOracle::State {
  std::size_t n;
  OracleParams params;
  std::size_t m;
  Grid grid;
  std::vector<Level> levels;
  std::vector<std::vector<std::pair<Vtx, Distance>>> adj;
  std::unordered_map<std::uint64_t, Distance> weight_of;
  std::vector<std::array<Distance, 3>> log;  // accepted insertions
  std::size_t frozen_violations = 0;
  std::size_t rebuilds = 0;

  std::vector<Distance> scratch;
  std::vector<Vtx> touched;

  State(std::size_t n_, OracleParams p, std::size_t m_) : n(n_), params(p), m(m_) {
    if (params.k < 1) throw PreconditionError("oracle needs k >= 1");
    if (params.d < 1) throw PreconditionError("oracle needs d >= 1");
    if (params.eps <= Ratio(0)) throw PreconditionError("oracle needs eps > 0");
    const double base = 1.0 + params.eps.value();
    const double growth = 3.0 + 2.0 * params.eps.value();
    std::vector<int> tops;
    for (int i = 0; i < params.k; ++i) {
      const double target = std::pow(growth, i) * static_cast<double>(params.d);
      int e = 0;
      while (std::pow(base, e) < target * (1 - 1e-12)) ++e;
      tops.push_back(e);
    }
    grid.key.push_back(0);
    for (int e = 0; e <= tops.back(); ++e)
      grid.key.push_back(static_cast<Distance>(std::floor(std::pow(base, e) + 1e-9)));
    adj.assign(n, {});
    scratch.assign(n, kFar);
    levels.resize(static_cast<std::size_t>(params.k));
    for (int i = 0; i < params.k; ++i) {
      Level& L = levels[static_cast<std::size_t>(i)];
      L.budget = static_cast<std::size_t>(
          std::ceil(2.0 * std::pow(static_cast<double>(m), static_cast<double>(i + 1) / params.k) - 1e-9));
      if (i == params.k - 1) L.budget = 2 * m;
      L.top = tops[static_cast<std::size_t>(i)];
      L.classes = std::max(1, L.top);
      L.tree.resize(n);
      L.holders.assign(n, {});
      L.claim.assign(static_cast<std::size_t>(L.classes), std::vector<Claim>(n));
      L.detour.assign(n, {});
    }
    std::vector<Output> outs;
    for (Vtx v = 0; v < static_cast<Vtx>(n); ++v) add_root(0, v, outs);
  }

  std::size_t deg(Vtx v) const { return adj[static_cast<std::size_t>(v)].size(); }

  static std::uint64_t pair_key(Vtx a, Vtx b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) | static_cast<std::uint32_t>(b);
  }

  // Dijkstra from u over vertices within `limit`, stopping as soon as the
  // accumulated degree of extracted vertices exceeds `budget`.
  Probe probe(Vtx u, Distance limit, std::size_t budget) {
    Probe p;
    using Item = std::pair<Distance, Vtx>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    auto set = [&](Vtx v, Distance d) {
      if (scratch[static_cast<std::size_t>(v)] == kFar) touched.push_back(v);
      scratch[static_cast<std::size_t>(v)] = d;
      heap.emplace(d, v);
    };
    std::size_t load = 0;
    if (limit >= 0) set(u, 0);
    while (!heap.empty()) {
      auto [d, x] = heap.top();
      heap.pop();
      if (d != scratch[static_cast<std::size_t>(x)]) continue;
      scratch[static_cast<std::size_t>(x)] = -1;  // settled
      p.order.emplace_back(x, d);
      load += deg(x);
      if (load > budget) {
        p.overflow = true;
        break;
      }
      for (auto [y, w] : adj[static_cast<std::size_t>(x)]) {
        const Distance nd = d + w;
        const Distance cur = scratch[static_cast<std::size_t>(y)];
        if (nd <= limit && cur != -1 && nd < cur) set(y, nd);
      }
    }
    for (Vtx v : touched) scratch[static_cast<std::size_t>(v)] = kFar;
    touched.clear();
    return p;
  }

  void assign(int i, Vtx u, Tree& t, const std::vector<std::pair<Vtx, Distance>>& ball) {
    Level& L = levels[static_cast<std::size_t>(i)];
    for (Vtx v : t.members) {
      L.holders[static_cast<std::size_t>(v)].erase(u);
      t.dist[static_cast<std::size_t>(v)] = kFar;
    }
    t.members.clear();
    for (auto [v, d] : ball) {
      t.members.push_back(v);
      t.dist[static_cast<std::size_t>(v)] = d;
      L.holders[static_cast<std::size_t>(v)].insert(u);
    }
  }

  // Recomputes the ball of u at its current radius; shrinks it if too heavy.
  void regrow(int i, Vtx u, std::vector<Output>& outs) {
    Level& L = levels[static_cast<std::size_t>(i)];
    Tree& t = *L.tree[static_cast<std::size_t>(u)];
    Probe p = probe(u, grid.at(t.exp), L.budget);
    if (!p.overflow) {
      assign(i, u, t, p.order);
      return;
    }
    const auto [last, x] = p.order.back();
    int e = kEmptyExp;
    if (last != u) {
      e = t.exp - 1;
      while (e > -1 && grid.at(e) >= x) --e;
    }
    t.exp = e;
    ++t.shrinks;
    std::vector<std::pair<Vtx, Distance>> ball;
    for (auto [v, d] : p.order)
      if (d <= grid.at(e)) ball.emplace_back(v, d);
    assign(i, u, t, ball);
    // frozen radius must stay within one grid step of the new radius
    const Distance cap = e == kEmptyExp ? 0 : grid.at(e + 1);
    if (x > cap) ++frozen_violations;
    outs.push_back({u, e, std::move(p.order)});
  }

  void add_root(int i, Vtx u, std::vector<Output>& outs) {
    Level& L = levels[static_cast<std::size_t>(i)];
    if (L.tree[static_cast<std::size_t>(u)]) return;
    auto t = std::make_unique<Tree>();
    t->exp = L.top;
    t->dist.assign(n, kFar);
    L.tree[static_cast<std::size_t>(u)] = std::move(t);
    ++L.roots;
    regrow(i, u, outs);
  }

  // Extends the tree of u after edge (a,b) got weight w; shrinks on overflow.
  void update(int i, Vtx u, Vtx a, Vtx b, Distance w, std::vector<Output>& outs) {
    Level& L = levels[static_cast<std::size_t>(i)];
    Tree& t = *L.tree[static_cast<std::size_t>(u)];
    const Distance limit = grid.at(t.exp);
    using Item = std::pair<Distance, Vtx>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    auto lower = [&](Vtx y, Distance nd) {
      auto& cur = t.dist[static_cast<std::size_t>(y)];
      if (nd > limit || nd >= cur) return;
      if (cur == kFar) {
        t.members.push_back(y);
        L.holders[static_cast<std::size_t>(y)].insert(u);
      }
      cur = nd;
      heap.emplace(nd, y);
    };
    for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
      const Distance dx = t.dist[static_cast<std::size_t>(x)];
      if (dx != kFar) lower(y, dx + w);
    }
    while (!heap.empty()) {
      auto [d, x] = heap.top();
      heap.pop();
      if (d != t.dist[static_cast<std::size_t>(x)]) continue;
      for (auto [y, wy] : adj[static_cast<std::size_t>(x)]) lower(y, d + wy);
    }
    std::size_t load = 0;
    for (Vtx v : t.members) load += deg(v);
    if (load > L.budget) regrow(i, u, outs);
  }

  void settle(int i, std::vector<Output>& outs) {
    Level& L = levels[static_cast<std::size_t>(i)];
    for (Output& o : outs) {
      if (i == params.k - 1) continue;  // budget 2m: cannot happen
      const int cls = class_of(o.exp);
      auto& claims = L.claim[static_cast<std::size_t>(cls - 1)];
      Vtx hit = -1;
      Distance hit_dist = 0;
      for (auto [v, d] : o.frozen)
        if (claims[static_cast<std::size_t>(v)].root != -1 && (hit == -1 || v < hit)) {
          hit = v;
          hit_dist = d;
        }
      if (hit == -1) {
        for (auto [v, d] : o.frozen) claims[static_cast<std::size_t>(v)] = {o.root, d};
        levels[static_cast<std::size_t>(i + 1)].pending.push_back(o.root);
      } else {
        L.detour[static_cast<std::size_t>(o.root)] = {hit, hit_dist, cls};
      }
    }
  }

  void apply(Vtx a, Vtx b, Distance w) {
    auto [it, fresh] = weight_of.emplace(pair_key(a, b), w);
    if (fresh) {
      adj[static_cast<std::size_t>(a)].emplace_back(b, w);
      adj[static_cast<std::size_t>(b)].emplace_back(a, w);
    } else {
      it->second = w;
      for (auto& [y, wy] : adj[static_cast<std::size_t>(a)])
        if (y == b) wy = w;
      for (auto& [y, wy] : adj[static_cast<std::size_t>(b)])
        if (y == a) wy = w;
    }
    for (int i = 0; i < params.k; ++i) {
      Level& L = levels[static_cast<std::size_t>(i)];
      std::vector<Output> outs;
      std::vector<Vtx> hit(L.holders[static_cast<std::size_t>(a)].begin(),
                           L.holders[static_cast<std::size_t>(a)].end());
      hit.insert(hit.end(), L.holders[static_cast<std::size_t>(b)].begin(),
                 L.holders[static_cast<std::size_t>(b)].end());
      std::sort(hit.begin(), hit.end());
      hit.erase(std::unique(hit.begin(), hit.end()), hit.end());
      for (Vtx u : hit) update(i, u, a, b, w, outs);
      std::vector<Vtx> fresh_roots;
      fresh_roots.swap(L.pending);
      for (Vtx u : fresh_roots) add_root(i, u, outs);
      settle(i, outs);
    }
  }

  Distance query(Vtx u, Vtx v) const {
    if (u == v) return 0;
    Vtx cur = u;
    Distance s = 0;
    for (int i = 0; i < params.k; ++i) {
      const Level& L = levels[static_cast<std::size_t>(i)];
      if (cur == v) return s;
      const Tree& t = *L.tree[static_cast<std::size_t>(cur)];
      const Distance dv = t.dist[static_cast<std::size_t>(v)];
      if (dv != kFar) return s + dv;
      if (t.exp == L.top || i + 1 == params.k) return kFar;
      if (levels[static_cast<std::size_t>(i + 1)].tree[static_cast<std::size_t>(cur)]) continue;
      const Detour& det = L.detour[static_cast<std::size_t>(cur)];
      if (det.via < 0 || det.cls != class_of(t.exp)) throw std::logic_error("oracle detour pointer missing");
      const Claim& c = L.claim[static_cast<std::size_t>(det.cls - 1)][static_cast<std::size_t>(det.via)];
      s += det.via_dist + c.dist;
      cur = c.root;
    }
    return kFar;
  }
};

IncrementalOracle::IncrementalOracle(std::size_t n, OracleParams params, bool record_transcript)
    : state_(std::make_unique<State>(n, params, std::max<std::size_t>(n, 1))), record_(record_transcript) {}
IncrementalOracle::~IncrementalOracle() = default;
IncrementalOracle::IncrementalOracle(IncrementalOracle&&) noexcept = default;
IncrementalOracle& IncrementalOracle::operator=(IncrementalOracle&&) noexcept = default;

void IncrementalOracle::insert(std::int32_t u, std::int32_t v, Distance w) {
  State& s = *state_;
  if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= s.n || static_cast<std::size_t>(v) >= s.n)
    throw PreconditionError("oracle vertex out of range");
  if (u == v) throw PreconditionError("oracle self-loop");
  if (w < 1) throw PreconditionError("oracle weights must be positive integers");
  if (record_) transcript_.push_back({OracleEvent::Kind::Insert, u, v, w});
  auto it = s.weight_of.find(State::pair_key(u, v));
  if (it != s.weight_of.end() && it->second <= w) return;
  s.log.push_back({u, v, w});
  if (s.log.size() > s.m) {
    auto log = std::move(s.log);
    const std::size_t rebuilds = s.rebuilds + 1;
    auto fresh = std::make_unique<State>(s.n, s.params, s.m * 2);
    for (const auto& e : log) {
      fresh->log.push_back(e);
      fresh->apply(static_cast<Vtx>(e[0]), static_cast<Vtx>(e[1]), e[2]);
    }
    fresh->rebuilds = rebuilds;
    fresh->frozen_violations += s.frozen_violations;
    state_ = std::move(fresh);
    return;
  }
  s.apply(u, v, w);
}

Distance IncrementalOracle::query(std::int32_t u, std::int32_t v) {
  const State& s = *state_;
  if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= s.n || static_cast<std::size_t>(v) >= s.n)
    throw PreconditionError("oracle vertex out of range");
  const Distance r = s.query(u, v);
  if (record_) transcript_.push_back({OracleEvent::Kind::Query, u, v, r});
  return r;
}

std::size_t IncrementalOracle::num_vertices() const { return state_->n; }
std::size_t IncrementalOracle::edge_budget() const { return state_->m; }
std::size_t IncrementalOracle::insertions() const { return state_->log.size(); }
std::size_t IncrementalOracle::level_size(int i) const { return state_->levels.at(static_cast<std::size_t>(i)).roots; }
std::size_t IncrementalOracle::rebuilds() const { return state_->rebuilds; }
std::size_t IncrementalOracle::level_budget(int i) const {
  return state_->levels.at(static_cast<std::size_t>(i)).budget;
}
Distance IncrementalOracle::level_radius(int i) const {
  return state_->grid.at(state_->levels.at(static_cast<std::size_t>(i)).top);
}
int IncrementalOracle::class_count(int i) const { return state_->levels.at(static_cast<std::size_t>(i)).classes; }
const std::vector<OracleEvent>& IncrementalOracle::transcript() const { return transcript_; }
const OracleParams& IncrementalOracle::params() const { return state_->params; }

OracleInvariantReport IncrementalOracle::check_invariants() const {
  const State& s = *state_;
  OracleInvariantReport rep;
  auto fail = [&](std::string msg) {
    rep.ok = false;
    if (rep.failures.size() < 20) rep.failures.push_back(std::move(msg));
  };
  if (s.frozen_violations) fail("frozen tree radius exceeded one grid step");

  // exact single-source distances in the current graph
  auto exact = [&](Vtx src) {
    std::vector<Distance> dist(s.n, kFar);
    using Item = std::pair<Distance, Vtx>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    dist[static_cast<std::size_t>(src)] = 0;
    heap.emplace(0, src);
    while (!heap.empty()) {
      auto [d, x] = heap.top();
      heap.pop();
      if (d != dist[static_cast<std::size_t>(x)]) continue;
      for (auto [y, w] : s.adj[static_cast<std::size_t>(x)])
        if (d + w < dist[static_cast<std::size_t>(y)]) {
          dist[static_cast<std::size_t>(y)] = d + w;
          heap.emplace(d + w, y);
        }
    }
    return dist;
  };
  std::vector<std::vector<Distance>> all;
  for (Vtx v = 0; v < static_cast<Vtx>(s.n); ++v) all.push_back(exact(v));
  auto ball_load = [&](const std::vector<Distance>& dist, Distance r) {
    std::size_t load = 0;
    for (std::size_t v = 0; v < s.n; ++v)
      if (dist[v] <= r) load += s.deg(static_cast<Vtx>(v));
    return load;
  };

  for (int i = 0; i < s.params.k; ++i) {
    const Level& L = s.levels[static_cast<std::size_t>(i)];
    const std::string at = "level " + std::to_string(i) + ": ";
    if (i == 0 && L.roots != s.n) fail(at + "A_0 is not the whole vertex set");
    if (i + 1 < s.params.k) {
      const double bound = 2.0 * static_cast<double>(s.m) / static_cast<double>(L.budget) * L.classes;
      if (static_cast<double>(s.levels[static_cast<std::size_t>(i + 1)].roots) >= bound)
        fail(at + "next level set too large");
    }
    for (Vtx u = 0; u < static_cast<Vtx>(s.n); ++u) {
      const Tree* t = L.tree[static_cast<std::size_t>(u)].get();
      if (!t) continue;
      const std::string who = at + "root " + std::to_string(u) + ": ";
      const auto& dist = all[static_cast<std::size_t>(u)];
      const Distance r = s.grid.at(t->exp);
      std::size_t count = 0;
      for (std::size_t v = 0; v < s.n; ++v) {
        const bool inside = dist[v] <= r;
        if (inside) ++count;
        if (inside != (t->dist[v] != kFar) || (inside && t->dist[v] != dist[v])) {
          fail(who + "ball differs at vertex " + std::to_string(v));
          break;
        }
        if (inside && L.holders[v].count(u) == 0) fail(who + "reverse index misses " + std::to_string(v));
      }
      if (count != t->members.size()) fail(who + "member list size mismatch");
      if (ball_load(dist, r) > L.budget) fail(who + "degree load over budget");
      if (t->exp != L.top && ball_load(dist, s.grid.at(t->exp == kEmptyExp ? -1 : t->exp + 1)) <= L.budget &&
          !(t->exp == kEmptyExp && s.deg(u) > L.budget))
        fail(who + "radius not maximal");
      if (t->shrinks > L.top + 2) fail(who + "too many shrinks");
      if (i + 1 < s.params.k && t->exp != L.top && !s.levels[static_cast<std::size_t>(i + 1)].tree[static_cast<std::size_t>(u)]) {
        const Detour& det = L.detour[static_cast<std::size_t>(u)];
        if (det.via < 0 || det.cls != class_of(t->exp)) {
          fail(who + "missing detour pointer");
          continue;
        }
        const Claim& c = L.claim[static_cast<std::size_t>(det.cls - 1)][static_cast<std::size_t>(det.via)];
        if (c.root < 0 || !s.levels[static_cast<std::size_t>(i + 1)].tree[static_cast<std::size_t>(c.root)])
          fail(who + "detour leads outside the next level");
        if (det.via_dist < dist[static_cast<std::size_t>(det.via)]) fail(who + "detour distance below exact");
        const Distance cap = s.grid.at(std::max(0, t->exp + 1));
        if (det.via_dist > cap) fail(who + "detour distance beyond frozen radius");
      }
    }
    // claims: every claimed root is promoted and its recorded distances are not below exact ones
    for (std::size_t j = 0; j < L.claim.size(); ++j)
      for (std::size_t v = 0; v < s.n; ++v) {
        const Claim& c = L.claim[j][v];
        if (c.root < 0) continue;
        if (i + 1 >= s.params.k || !s.levels[static_cast<std::size_t>(i + 1)].tree[static_cast<std::size_t>(c.root)])
          fail(at + "claimed root not promoted");
        else if (c.dist < all[static_cast<std::size_t>(c.root)][v])
          fail(at + "claimed distance below exact");
      }
  }
  return rep;
}

bool replay_transcript(std::size_t n, OracleParams params, const std::vector<OracleEvent>& events) {
  IncrementalOracle o(n, params);
  for (const OracleEvent& e : events) {
    if (e.kind == OracleEvent::Kind::Insert)
      o.insert(e.u, e.v, e.value);
    else if (o.query(e.u, e.v) != e.value)
      return false;
  }
  return true;
}

EsApsp::EsApsp(std::size_t n, Distance threshold)
    : threshold_(threshold), adj_(n), dist_(n, std::vector<Distance>(n, kFar)) {
  for (std::size_t s = 0; s < n; ++s) dist_[s][s] = 0;
}

void EsApsp::relax_from(std::size_t source, std::int32_t start, Distance start_dist) {
  auto& dist = dist_[source];
  if (start_dist > threshold_ || start_dist >= dist[static_cast<std::size_t>(start)]) return;
  using Item = std::pair<Distance, std::int32_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[static_cast<std::size_t>(start)] = start_dist;
  heap.emplace(start_dist, start);
  while (!heap.empty()) {
    auto [d, x] = heap.top();
    heap.pop();
    if (d != dist[static_cast<std::size_t>(x)]) continue;
    for (auto [y, w] : adj_[static_cast<std::size_t>(x)]) {
      const Distance nd = d + w;
      if (nd <= threshold_ && nd < dist[static_cast<std::size_t>(y)]) {
        dist[static_cast<std::size_t>(y)] = nd;
        heap.emplace(nd, y);
      }
    }
  }
}

void EsApsp::insert(std::int32_t u, std::int32_t v, Distance w) {
  if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= adj_.size() || static_cast<std::size_t>(v) >= adj_.size())
    throw PreconditionError("vertex out of range");
  if (w < 1) throw PreconditionError("weights must be positive integers");
  adj_[static_cast<std::size_t>(u)].emplace_back(v, w);
  adj_[static_cast<std::size_t>(v)].emplace_back(u, w);
  for (std::size_t s = 0; s < adj_.size(); ++s) {
    const Distance du = dist_[s][static_cast<std::size_t>(u)];
    const Distance dv = dist_[s][static_cast<std::size_t>(v)];
    if (du != kFar) relax_from(s, v, du + w);
    if (dv != kFar) relax_from(s, u, dv + w);
  }
}

Distance EsApsp::query(std::int32_t u, std::int32_t v) const {
  return dist_.at(static_cast<std::size_t>(u)).at(static_cast<std::size_t>(v));
}

}  // namespace spanwright
