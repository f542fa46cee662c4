#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "spanwright/generators.hpp"
#include "spanwright/io.hpp"
#include "spanwright/metrics.hpp"
#include "spanwright/suite.hpp"

using namespace spanwright;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kPrecondition = 3 };

std::uint64_t default_seed() {
  if (const char* env = std::getenv("SPANWRIGHT_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "ignoring malformed SPANWRIGHT_SEED\n";
    }
  }
  return 1;
}

void emit(const json& j, const std::string& path) {
  if (path.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << j.dump(2) << "\n";
}

json lightness_or_null(const WeightedGraph& g, std::span<const EdgeId> ids) {
  if (!is_connected(g)) return nullptr;
  return lightness(g, ids);
}

struct GenerateArgs {
  std::string family, out;
  std::size_t n = 0, m = 0, cols = 0;
  int k = 1;
  std::string heavy = "1";
  std::int64_t max_weight = 1;
  std::uint64_t seed = 1;
};

int cmd_generate(const GenerateArgs& a) {
  GraphFamilySpec s;
  s.family = parse_family(a.family);
  s.n = a.n;
  s.m = a.m;
  s.cols = a.cols;
  s.k = a.k;
  s.heavy = parse_weight(a.heavy);
  s.max_weight = a.max_weight;
  s.seed = a.seed;
  WeightedGraph g = generate(s);
  save_graph(a.out, g);
  emit({{"schema", kReportSchema},
        {"command", "generate"},
        {"family", family_name(s.family)},
        {"n", g.num_vertices()},
        {"m", g.num_edges()},
        {"mst_weight", format_weight(mst_weight(g))}},
       "");
  return kOk;
}

struct BuildArgs {
  std::string algo, in, out, report;
  int k = 2;
  std::string eps = "1/2";
  std::uint64_t seed = 1;
  bool strict = false, verify = false, timing = false;
};

int cmd_build(const BuildArgs& a) {
  AlgoParams p;
  p.k = a.k;
  p.eps = Ratio::parse(a.eps);
  p.seed = a.seed;
  p.strict = a.strict;
  // parameter checks that do not depend on the input
  try {
    run_algorithm(a.algo, WeightedGraph(1, {}), p);
  } catch (const PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return kPrecondition;
  }
  if (a.in.empty()) {
    std::cerr << "build needs --in\n";
    return kUsage;
  }
  const WeightedGraph g = load_graph(a.in);
  const auto start = std::chrono::steady_clock::now();
  AlgoRun run;
  try {
    run = run_algorithm(a.algo, g, p);
  } catch (const PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return kPrecondition;
  }
  const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (!a.out.empty()) save_edges(a.out, g, run.result.edges);

  json report = {{"schema", kReportSchema},
                 {"command", "build"},
                 {"algo", a.algo},
                 {"params", {{"k", p.k}, {"eps", p.eps.str()}, {"seed", p.seed}, {"strict", p.strict}}},
                 {"input", {{"n", g.num_vertices()}, {"m", g.num_edges()}, {"mst_weight", format_weight(mst_weight(g))}}},
                 {"size", run.result.size()},
                 {"weight", format_weight(run.result.weight(g))},
                 {"lightness", lightness_or_null(g, run.result.edges)},
                 {"claimed_stretch", run.result.claimed_stretch.str()},
                 {"budget", run.budget.str()},
                 {"hop_metric", run.hop_metric},
                 {"measured_stretch", nullptr},
                 {"verified", nullptr},
                 {"runtime_ms", nullptr}};
  int code = kOk;
  if (a.verify) {
    const StretchReport rep = verify_run(g, run);
    report["measured_stretch"] = rep.max_ratio;
    report["verified"] = rep.ok;
    if (!rep.ok) code = kVerifyFailed;
  }
  if (a.timing) report["runtime_ms"] = elapsed;
  emit(report, a.report);
  return code;
}

struct VerifyArgs {
  std::string graph, spanner, stretch;
};

int cmd_verify(const VerifyArgs& a) {
  const WeightedGraph g = load_graph(a.graph);
  const WeightedGraph h = load_graph(a.spanner);
  const Ratio t = Ratio::parse(a.stretch);
  std::vector<EdgeId> ids;
  if (h.num_vertices() > g.num_vertices() || !match_edges(g, h, ids)) {
    emit({{"schema", kReportSchema}, {"command", "verify"}, {"ok", false}, {"subset", false}}, "");
    return kUsage;
  }
  std::sort(ids.begin(), ids.end());
  const StretchReport rep = verify_stretch(g, ids, t);
  json worst = nullptr;
  if (rep.witness) {
    const Edge& e = g.edge(*rep.witness);
    const Weight d = dijkstra(subgraph(g, ids), e.u)[static_cast<std::size_t>(e.v)];
    worst = {{"u", e.u},
             {"v", e.v},
             {"graph_distance", format_weight(e.w)},
             {"spanner_distance", d == kInfinity ? json(nullptr) : json(format_weight(d))},
             {"ratio", d == kInfinity ? json(nullptr) : json(rep.max_ratio)}};
  }
  emit({{"schema", kReportSchema},
        {"command", "verify"},
        {"stretch", t.str()},
        {"subset", true},
        {"ok", rep.ok},
        {"measured_stretch", std::isfinite(rep.max_ratio) ? json(rep.max_ratio) : json(nullptr)},
        {"worst", worst}},
       "");
  return rep.ok ? kOk : kVerifyFailed;
}

struct BenchArgs {
  std::string suite;
  bool json_out = false;
  int k = 3;
  std::uint64_t seed = 1;
  std::size_t queries = 1250;
  std::size_t check_every = 100;
};

int cmd_bench(const BenchArgs& a) {
  json r;
  if (a.suite == "appendix-a")
    r = bench_appendix_a(a.k);
  else if (a.suite == "random")
    r = bench_random(a.seed);
  else
    r = bench_oracle(a.seed, a.queries, a.check_every);
  if (a.json_out) {
    emit(r, "");
  } else {
    std::cout << a.suite << ": " << (r["ok"].get<bool>() ? "ok" : "FAILED") << "\n";
  }
  return r["ok"].get<bool>() ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spanwright: graph spanner constructions and checks"};
  app.require_subcommand(1);
  const std::uint64_t seed0 = default_seed();

  GenerateArgs ga;
  ga.seed = seed0;
  auto* gen = app.add_subcommand("generate", "write a graph from a family");
  gen->add_option("--family", ga.family, "bad-cycle|clique-cycle|gnm|grid|path|complete|tree-plus")->required();
  gen->add_option("--out", ga.out, "output edge-list file")->required();
  gen->add_option("--n", ga.n);
  gen->add_option("--m", ga.m);
  gen->add_option("--cols", ga.cols);
  gen->add_option("--k", ga.k);
  gen->add_option("--weight-W", ga.heavy, "heavy edge weight");
  gen->add_option("--max-weight", ga.max_weight);
  gen->add_option("--seed", ga.seed);

  BuildArgs ba;
  ba.seed = seed0;
  auto* build = app.add_subcommand("build", "build a spanner");
  build->add_option("--algo", ba.algo)->required()->check(CLI::IsMember(algorithm_names()));
  build->add_option("--in", ba.in, "input graph");
  build->add_option("--out", ba.out, "spanner edge-list file");
  build->add_option("--report", ba.report, "report file (stdout if absent)");
  build->add_option("--k", ba.k);
  build->add_option("--eps", ba.eps);
  build->add_option("--seed", ba.seed);
  build->add_flag("--strict", ba.strict, "fastcw: paper constants (needs k >= 640)");
  build->add_flag("--test-mode", [&](std::int64_t) { ba.strict = false; }, "fastcw: small constants (default)");
  build->add_flag("--verify", ba.verify, "check the stretch budget exactly");
  build->add_flag("--timing", ba.timing, "record runtime_ms");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "check a spanner's stretch");
  verify->add_option("--graph", va.graph)->required();
  verify->add_option("--spanner", va.spanner)->required();
  verify->add_option("--stretch", va.stretch)->required();

  BenchArgs be;
  be.seed = seed0;
  auto* bench = app.add_subcommand("bench", "run a benchmark suite");
  bench->add_option("--suite", be.suite)->required()->check(CLI::IsMember({"appendix-a", "random", "oracle"}));
  bench->add_flag("--json", be.json_out);
  bench->add_option("--k", be.k);
  bench->add_option("--seed", be.seed);
  bench->add_option("--queries", be.queries, "oracle: queries per configuration");
  bench->add_option("--check-every", be.check_every, "oracle: invariant check period in events");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  try {
    if (*gen) return cmd_generate(ga);
    if (*build) return cmd_build(ba);
    if (*verify) return cmd_verify(va);
    return cmd_bench(be);
  } catch (const PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return *gen ? kUsage : kPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
