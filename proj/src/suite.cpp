#include "spanwright/suite.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <random>

#include "spanwright/compose.hpp"
#include "spanwright/fastcw.hpp"
#include "spanwright/generators.hpp"
#include "spanwright/greedy.hpp"
#include "spanwright/hz.hpp"
#include "spanwright/io.hpp"
#include "spanwright/oracle.hpp"
#include "spanwright/sparse.hpp"

namespace spanwright {

using nlohmann::json;

namespace {

Ratio odd(int k) { return Ratio(2 * k - 1); }

Ratio plus(Ratio eps, int factor) { return Ratio(1) + Ratio(factor) * eps; }

using Runner = std::function<AlgoRun(const WeightedGraph&, const AlgoParams&)>;

AlgoRun claimed(SpannerResult r) {
  Ratio t = r.claimed_stretch;
  return {std::move(r), t, false};
}

const std::map<std::string, Runner>& registry() {
  static const std::map<std::string, Runner> table = {
      {"greedy", [](const WeightedGraph& g, const AlgoParams& p) { return claimed(greedy_spanner(g, odd(p.k))); }},
      {"approx-greedy",
       [](const WeightedGraph& g, const AlgoParams& p) { return claimed(approx_greedy_spanner(g, p.k, p.eps)); }},
      {"girth", [](const WeightedGraph& g, const AlgoParams& p) { return claimed(girth_spanner(g, p.k)); }},
      {"quad-greedy",
       [](const WeightedGraph& g, const AlgoParams& p) {
         return AlgoRun{quad_greedy_spanner(g, p.k, p.eps), odd(p.k) * plus(p.eps, 3), false};
       }},
      {"hz",
       [](const WeightedGraph& g, const AlgoParams& p) {
         return AlgoRun{hz_spanner(g, p.k).spanner, odd(p.k), true};
       }},
      {"modified-hz",
       [](const WeightedGraph& g, const AlgoParams& p) {
         return AlgoRun{modified_hz_spanner(g, p.k).spanner, odd(p.k), true};
       }},
      {"sparse",
       [](const WeightedGraph& g, const AlgoParams& p) {
         return AlgoRun{sparse_spanner(g, p.k, p.eps).spanner, odd(p.k) * plus(p.eps, 3), false};
       }},
      {"aspect",
       [](const WeightedGraph& g, const AlgoParams& p) {
         return AlgoRun{aspect_spanner(g, p.k, p.eps), odd(p.k) * plus(p.eps, 3), false};
       }},
      {"fastcw",
       [](const WeightedGraph& g, const AlgoParams& p) {
         FastCwConfig cfg = p.strict ? FastCwConfig{} : FastCwConfig::test_mode(p.k, p.eps);
         cfg.k = p.k;
         cfg.eps = p.eps;
         return claimed(fastcw_full(g, cfg));
       }},
      {"fast-light",
       [](const WeightedGraph& g, const AlgoParams& p) { return claimed(fast_light_spanner(g, p.k, p.eps)); }},
      {"slow-good",
       [](const WeightedGraph& g, const AlgoParams& p) {
         return AlgoRun{slow_good_spanner(g, p.k, p.eps), odd(p.k) * plus(p.eps, 3), false};
       }},
      {"baswana-sen",
       [](const WeightedGraph& g, const AlgoParams& p) { return claimed(baswana_sen(g, p.k, p.seed)); }},
      {"double-invocation",
       [](const WeightedGraph& g, const AlgoParams& p) { return claimed(double_invocation(g, p.eps, p.k, p.seed)); }},
  };
  return table;
}

GraphFamilySpec spec(Family f, std::size_t n, std::size_t m, std::int64_t maxw, std::uint64_t seed) {
  GraphFamilySpec s;
  s.family = f;
  s.n = n;
  s.m = m;
  s.max_weight = maxw;
  s.seed = seed;
  return s;
}

GraphFamilySpec bad_cycle(int k, std::int64_t w) {
  GraphFamilySpec s;
  s.family = Family::BadCycle;
  s.k = k;
  s.heavy = units(w);
  return s;
}

GraphFamilySpec clique_cycle(std::size_t n, std::int64_t w) {
  GraphFamilySpec s;
  s.family = Family::CliqueCycle;
  s.n = n;
  s.heavy = units(w);
  return s;
}

std::string describe(const GraphFamilySpec& s) {
  std::string out = family_name(s.family) + "(n=" + std::to_string(s.n);
  if (s.family == Family::BadCycle) out = family_name(s.family) + "(k=" + std::to_string(s.k);
  if (s.m) out += ",m=" + std::to_string(s.m);
  if (s.family == Family::BadCycle || s.family == Family::CliqueCycle) out += ",W=" + format_weight(s.heavy);
  if (s.max_weight > 1) out += ",maxw=" + std::to_string(s.max_weight);
  if (s.family == Family::Gnm || s.family == Family::TreePlus) out += ",seed=" + std::to_string(s.seed);
  return out + ")";
}

json round_trip(double x) { return std::round(x * 1e6) / 1e6; }

}  // namespace

const std::vector<std::string>& algorithm_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, run] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

AlgoRun run_algorithm(const std::string& name, const WeightedGraph& g, const AlgoParams& p) {
  auto it = registry().find(name);
  if (it == registry().end()) throw Error("unknown algorithm '" + name + "'");
  return it->second(g, p);
}

StretchReport verify_run(const WeightedGraph& g, const AlgoRun& run) {
  if (run.hop_metric) return verify_stretch(g.unit_weighted(), run.result.edges, run.budget);
  return verify_stretch(g, run.result.edges, run.budget);
}

std::vector<Instance> standard_instances() {
  std::vector<GraphFamilySpec> specs = {
      spec(Family::Gnm, 40, 120, 1, 1),        spec(Family::Gnm, 80, 400, 1, 2),
      spec(Family::Gnm, 120, 900, 1, 3),       spec(Family::Gnm, 200, 2000, 1, 4),
      spec(Family::Gnm, 60, 400, 10, 5),       spec(Family::Gnm, 150, 1500, 10, 6),
      spec(Family::Gnm, 60, 400, 100, 7),      spec(Family::Gnm, 150, 1500, 100, 8),
      spec(Family::Gnm, 60, 400, 1000, 9),     spec(Family::Gnm, 150, 1500, 1000, 10),
      spec(Family::TreePlus, 100, 800, 50, 11), spec(Family::TreePlus, 150, 1200, 1000, 12),
      spec(Family::TreePlus, 200, 1600, 81, 13), spec(Family::TreePlus, 80, 500, 9, 14),
      bad_cycle(2, 1000),                      bad_cycle(3, 1000),
      bad_cycle(5, 1000),                      clique_cycle(20, 100),
      clique_cycle(40, 100),                   spec(Family::Grid, 8, 0, 1, 15),
      spec(Family::Grid, 10, 0, 20, 16),       spec(Family::Grid, 12, 0, 5, 17),
      spec(Family::Path, 50, 0, 10, 18),       spec(Family::Path, 100, 0, 1, 19),
      spec(Family::Complete, 12, 0, 1, 20),    spec(Family::Complete, 20, 0, 30, 21),
      spec(Family::Gnm, 200, 300, 100, 22),    spec(Family::Gnm, 100, 150, 1, 23),
      spec(Family::Gnm, 150, 400, 10000, 24),  spec(Family::Gnm, 50, 1000, 7, 25),
  };
  std::vector<Instance> out;
  for (const auto& s : specs) out.push_back({describe(s), generate(s)});
  return out;
}

json bench_appendix_a(int k) {
  json rows = json::array();
  bool ok = true;
  const int edges = 2 * k;
  for (std::int64_t w : {std::int64_t{100}, std::int64_t{10'000}, std::int64_t{1'000'000}}) {
    const WeightedGraph g = generate(bad_cycle(k, w));
    const double baseline = lightness(g, hop_greedy_spanner(g, k).edges);
    const double greedy = lightness(g, greedy_spanner(g, odd(k)).edges);
    const double approx = lightness(g, approx_greedy_spanner(g, k, Ratio(1, 2)).edges);
    const double light = lightness(g, fast_light_spanner(g, k).edges);
    const double expected = static_cast<double>(edges + w) / edges;
    const bool row_ok = std::abs(baseline - expected) <= 1e-9 * expected && greedy <= 3 && approx <= 3 && light <= 3;
    ok = ok && row_ok;
    rows.push_back({{"graph", describe(bad_cycle(k, w))},
                    {"W", w},
                    {"hop_baseline", round_trip(baseline)},
                    {"hop_baseline_expected", round_trip(expected)},
                    {"greedy", round_trip(greedy)},
                    {"approx_greedy", round_trip(approx)},
                    {"fast_light", round_trip(light)},
                    {"ok", row_ok}});
  }
  const WeightedGraph cc = generate(clique_cycle(40, 10'000));
  double bs_total = 0;
  const int seeds = 20;
  for (int s = 1; s <= seeds; ++s) bs_total += lightness(cc, baswana_sen(cc, k, static_cast<std::uint64_t>(s)).edges);
  const double bs_mean = bs_total / seeds;
  const double greedy_cc = lightness(cc, greedy_spanner(cc, odd(k)).edges);
  const bool cc_ok = bs_mean >= 10 * greedy_cc;
  ok = ok && cc_ok;
  json clique = {{"graph", describe(clique_cycle(40, 10'000))},
                 {"baswana_sen_mean", round_trip(bs_mean)},
                 {"seeds", seeds},
                 {"greedy", round_trip(greedy_cc)},
                 {"hop_baseline", round_trip(lightness(cc, hop_greedy_spanner(cc, k).edges))},
                 {"ratio", round_trip(bs_mean / greedy_cc)},
                 {"ok", cc_ok}};
  return {{"schema", kReportSchema}, {"suite", "appendix-a"}, {"k", k}, {"bad_cycle", rows},
          {"clique_cycle", clique}, {"ok", ok}};
}

json bench_random(std::uint64_t seed) {
  std::vector<GraphFamilySpec> specs = {
      spec(Family::Gnm, 60, 300, 50, seed),
      spec(Family::Gnm, 100, 600, 1, seed + 1),
      spec(Family::TreePlus, 80, 400, 100, seed + 2),
      spec(Family::Gnm, 120, 1000, 1000, seed + 3),
  };
  json cells = json::array();
  bool ok = true;
  for (const auto& s : specs) {
    const WeightedGraph g = generate(s);
    for (const std::string& name : algorithm_names())
      for (int k : {2, 3}) {
        AlgoParams p;
        p.k = k;
        p.seed = seed;
        const AlgoRun run = run_algorithm(name, g, p);
        const StretchReport rep = verify_run(g, run);
        ok = ok && rep.ok;
        cells.push_back({{"graph", describe(s)},
                         {"algo", name},
                         {"k", k},
                         {"size", run.result.size()},
                         {"budget", run.budget.str()},
                         {"measured_stretch", round_trip(rep.max_ratio)},
                         {"ok", rep.ok}});
      }
  }
  return {{"schema", kReportSchema}, {"suite", "random"}, {"seed", seed}, {"cells", cells}, {"ok", ok}};
}

json bench_oracle(std::uint64_t seed, std::size_t queries_per_config, std::size_t check_every) {
  json configs = json::array();
  bool ok = true;
  std::mt19937_64 rng(seed);
  for (std::size_t n : {std::size_t{50}, std::size_t{100}})
    for (int k : {2, 3})
      for (Distance d : {Distance{10}, Distance{30}}) {
        OracleParams p;
        p.k = k;
        p.eps = Ratio(1, 2);
        p.d = d;
        IncrementalOracle oracle(n, p);
        DynamicGraph exact(n);
        const Ratio stretch = oracle_stretch(k, p.eps);
        std::size_t queries = 0, inserts = 0, events = 0, low = 0, high = 0, invariant_failures = 0, checks = 0;
        while (queries < queries_per_config) {
          const auto u = static_cast<Vertex>(uniform_below(rng, n));
          auto v = static_cast<Vertex>(uniform_below(rng, n - 1));
          if (v >= u) ++v;
          if (uniform_below(rng, 2) == 0) {
            const auto w = static_cast<Distance>(1 + uniform_below(rng, 5));
            oracle.insert(u, v, w);
            exact.add_edge(u, v, w);
            ++inserts;
          } else {
            const Distance est = oracle.query(u, v);
            const Weight truth = exact.bounded_distance(u, v, kInfinity - 1);
            if (truth != kInfinity && est != kFar && est < truth) ++low;
            if (truth == kInfinity && est != kFar) ++low;
            if (truth != kInfinity && truth <= d && (est == kFar || Ratio(est) > stretch * Ratio(truth))) ++high;
            ++queries;
          }
          ++events;
          if (check_every && events % check_every == 0) {
            ++checks;
            if (!oracle.check_invariants().ok) ++invariant_failures;
          }
        }
        const bool cfg_ok = low == 0 && high == 0 && invariant_failures == 0;
        ok = ok && cfg_ok;
        configs.push_back({{"n", n},
                           {"k", k},
                           {"d", d},
                           {"eps", p.eps.str()},
                           {"stretch", stretch.str()},
                           {"insertions", inserts},
                           {"queries", queries},
                           {"underestimates", low},
                           {"overestimates", high},
                           {"invariant_checks", checks},
                           {"invariant_failures", invariant_failures},
                           {"ok", cfg_ok}});
      }
  return {{"schema", kReportSchema}, {"suite", "oracle"}, {"seed", seed}, {"configs", configs}, {"ok", ok}};
}

}  // namespace spanwright
