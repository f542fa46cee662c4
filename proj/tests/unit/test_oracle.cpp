#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "spanwright/generators.hpp"
#include "spanwright/oracle.hpp"

using namespace spanwright;

namespace {

struct Plain {
  std::vector<std::vector<std::pair<int, Distance>>> adj;
  explicit Plain(std::size_t n) : adj(n) {}
  void add(int u, int v, Distance w) {
    adj[static_cast<std::size_t>(u)].emplace_back(v, w);
    adj[static_cast<std::size_t>(v)].emplace_back(u, w);
  }
  // Bellman-Ford style relaxation to a fixpoint; independent of the heap code.
  Distance dist(int s, int t) const {
    std::vector<Distance> d(adj.size(), kFar);
    d[static_cast<std::size_t>(s)] = 0;
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t x = 0; x < adj.size(); ++x)
        if (d[x] != kFar)
          for (auto [y, w] : adj[x])
            if (d[x] + w < d[static_cast<std::size_t>(y)]) {
              d[static_cast<std::size_t>(y)] = d[x] + w;
              changed = true;
            }
    }
    return d[static_cast<std::size_t>(t)];
  }
};

OracleParams params(int k, Distance d, Ratio eps = Ratio(1, 2)) {
  OracleParams p;
  p.k = k;
  p.d = d;
  p.eps = eps;
  return p;
}

}  // namespace

TEST_CASE("oracle trivial answers") {
  IncrementalOracle one(1, params(2, 5));
  CHECK(one.query(0, 0) == 0);
  IncrementalOracle fresh(10, params(3, 5));
  CHECK(fresh.query(2, 7) == kFar);
  CHECK(fresh.query(4, 4) == 0);
}

TEST_CASE("oracle stretch formula") {
  CHECK(oracle_stretch(3, Ratio(1, 2)) == Ratio(31));
  CHECK(oracle_stretch(2, Ratio(1, 2)) == Ratio(7));
  CHECK(oracle_stretch(1, Ratio(1, 4)) == Ratio(1));
}

TEST_CASE("oracle class counts follow the radius grid") {
  for (int k : {1, 2, 3})
    for (Distance d : {10, 30}) {
      IncrementalOracle o(20, params(k, d));
      for (int i = 0; i < k; ++i) {
        const double target = std::pow(4.0, i) * static_cast<double>(d);
        const int expected = static_cast<int>(std::ceil(std::log(target) / std::log(1.5) - 1e-9));
        CHECK(o.class_count(i) == expected);
        CHECK(static_cast<double>(o.level_radius(i)) == doctest::Approx(std::floor(std::pow(1.5, expected))));
      }
      CHECK(o.level_budget(k - 1) == 2 * o.edge_budget());
    }
}

TEST_CASE("oracle single edge") {
  IncrementalOracle o(5, params(2, 10));
  o.insert(1, 3, 1);
  CHECK(o.query(1, 3) == 1);
  CHECK(o.query(3, 1) == 1);
  CHECK(o.query(1, 2) == kFar);
}

TEST_CASE("oracle reinsertion") {
  IncrementalOracle o(4, params(2, 10));
  o.insert(0, 1, 5);
  o.insert(0, 1, 7);
  CHECK(o.insertions() == 1);
  CHECK(o.query(0, 1) == 5);
  o.insert(0, 1, 2);
  CHECK(o.insertions() == 2);
  CHECK(o.query(0, 1) == 2);
  CHECK_THROWS_AS(o.insert(0, 0, 1), PreconditionError);
  CHECK_THROWS_AS(o.insert(0, 1, 0), PreconditionError);
}

TEST_CASE("oracle invariants after every insertion") {
  std::mt19937_64 rng(11);
  IncrementalOracle o(60, params(2, 20));
  for (int t = 0; t < 500; ++t) {
    const int u = static_cast<int>(uniform_below(rng, 60));
    int v = static_cast<int>(uniform_below(rng, 59));
    if (v >= u) ++v;
    o.insert(u, v, 1 + static_cast<Distance>(uniform_below(rng, 6)));
    auto rep = o.check_invariants();
    REQUIRE_MESSAGE(rep.ok, t << ": " << (rep.failures.empty() ? "" : rep.failures.front()));
  }
  CHECK(o.rebuilds() > 0);
  CHECK(o.level_size(1) > 0);
}

TEST_CASE("oracle contract against exact distances") {
  struct Setting {
    std::size_t n;
    int k;
    Distance d;
    int steps;
  };
  for (Setting st : {Setting{100, 3, 30, 2000}, Setting{50, 2, 10, 1000}}) {
    std::mt19937_64 rng(st.n * 7 + static_cast<std::uint64_t>(st.k));
    IncrementalOracle o(st.n, params(st.k, st.d), true);
    Plain g(st.n);
    const Ratio bound = oracle_stretch(st.k, Ratio(1, 2));
    int low = 0, high = 0, within = 0;
    for (int t = 0; t < st.steps; ++t) {
      const int u = static_cast<int>(uniform_below(rng, st.n));
      int v = static_cast<int>(uniform_below(rng, st.n - 1));
      if (v >= u) ++v;
      const Distance w = 1 + static_cast<Distance>(uniform_below(rng, 5));
      o.insert(u, v, w);
      g.add(u, v, w);
      const int a = static_cast<int>(uniform_below(rng, st.n));
      const int b = static_cast<int>(uniform_below(rng, st.n));
      const Distance est = o.query(a, b);
      const Distance exact = g.dist(a, b);
      if (est < exact) ++low;
      if (exact <= st.d) {
        ++within;
        if (est == kFar || Ratio(est) > bound * Ratio(exact)) ++high;
      }
    }
    CHECK(low == 0);
    CHECK(high == 0);
    CHECK(within > 0);
    CHECK(o.level_size(1) > 0);
    CHECK(replay_transcript(st.n, params(st.k, st.d), o.transcript()));
  }
}

TEST_CASE("oracle event text round trip") {
  OracleEvent ins{OracleEvent::Kind::Insert, 3, 4, 7};
  OracleEvent q{OracleEvent::Kind::Query, 1, 2, kFar};
  CHECK(format_event(ins) == "+ 3 4 7");
  CHECK(format_event(q) == "? 1 2 *");
  CHECK(parse_event("? 1 2 *").value == kFar);
  CHECK(parse_event("+ 3 4 7").value == 7);
  CHECK_THROWS_AS(parse_event("+ 3 4 *"), Error);
  CHECK_THROWS_AS(parse_event("x 3 4 1"), Error);
  CHECK_THROWS_AS(parse_event("? 3 4 1z"), Error);
}

TEST_CASE("bounded exact distances under insertions") {
  EsApsp chain(4, 2);
  chain.insert(0, 1, 1);
  chain.insert(1, 2, 1);
  CHECK(chain.query(0, 2) == 2);
  chain.insert(2, 3, 1);
  CHECK(chain.query(0, 3) == kFar);
  CHECK(chain.query(1, 3) == 2);

  std::mt19937_64 rng(5);
  EsApsp es(50, 8);
  Plain g(50);
  std::vector<Distance> last(50 * 50, kFar);
  bool monotone = true, exact = true;
  for (int t = 0; t < 300; ++t) {
    const int u = static_cast<int>(uniform_below(rng, 50));
    int v = static_cast<int>(uniform_below(rng, 49));
    if (v >= u) ++v;
    const Distance w = 1 + static_cast<Distance>(uniform_below(rng, 4));
    es.insert(u, v, w);
    g.add(u, v, w);
    if (t % 30 == 29)
      for (int a = 0; a < 50; ++a) {
        for (int b = 0; b < 50; ++b) {
          const Distance got = es.query(a, b);
          Distance want = g.dist(a, b);
          if (want > 8) want = kFar;
          exact = exact && got == want;
          monotone = monotone && got <= last[static_cast<std::size_t>(a * 50 + b)];
          last[static_cast<std::size_t>(a * 50 + b)] = got;
        }
      }
  }
  CHECK(exact);
  CHECK(monotone);
}
