#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bds/distsim.hpp"
#include "bds/dynamic.hpp"
#include "bds/experiment.hpp"
#include "bds/graph.hpp"
#include "bds/local_access.hpp"
#include "bds/solvers.hpp"
#include "bds/sparsify.hpp"

namespace {

using namespace bds;

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw parse_error("cannot open " + path + " for writing", 0);
  out << text;
}

struct GenArgs {
  std::string kind = "forest";
  int n = 0;
  int alpha = 1;
  long long m = 0;
  std::uint64_t seed = 0;
  std::string out;
};

int run_gen(const GenArgs& a) {
  GeneratorSpec spec;
  if (a.kind == "forest")
    spec = {GeneratorSpec::Kind::ForestUnion, a.n, 0, a.alpha};
  else if (a.kind == "random")
    spec = {GeneratorSpec::Kind::RandomGraph, a.n, a.m, 1};
  else if (a.kind == "star")
    spec = {GeneratorSpec::Kind::Star, a.n, 0, 1};
  else if (a.kind == "clique")
    spec = {GeneratorSpec::Kind::Clique, a.n, 0, 1};
  else
    throw input_error("unknown generator kind '" + a.kind + "'");
  Graph g = build_graph(spec, a.seed);
  std::ostringstream text;
  save_graph(g, text);
  write_text(a.out, text.str());
  return 0;
}

struct SparsifyArgs {
  std::string graph;
  std::string kind = "matching";
  int alpha = 1;
  std::string beta;
  std::string eps = "1";
  std::optional<int> delta_override;
  std::string out;
};

int run_sparsify(const SparsifyArgs& a) {
  Graph g = load_graph(a.graph);
  Rational eps = Rational::parse(a.eps);
  std::ostringstream text;
  if (a.kind == "matching") {
    int delta = a.delta_override ? *a.delta_override : matching_delta(a.alpha, eps);
    save_matching_sparsifier(build_matching_sparsifier(g, delta), text);
  } else if (a.kind == "vc") {
    int delta = a.delta_override ? *a.delta_override : vc_delta(a.alpha, eps);
    save_vc_sparsifier(build_vc_sparsifier(g, delta), g.vertex_count(), text);
  } else if (a.kind == "is") {
    Rational beta = a.beta.empty() ? std::max(Rational(1), g.average_degree())
                                   : Rational::parse(a.beta);
    int delta = a.delta_override ? *a.delta_override : is_delta(beta, eps);
    save_is_sparsifier(build_is_sparsifier(g, delta), g.vertex_count(), text);
  } else {
    throw input_error("unknown sparsifier kind '" + a.kind + "'");
  }
  write_text(a.out, text.str());
  return 0;
}

struct SolveArgs {
  std::string graph;
  std::string problem = "matching";
  std::string method = "exact";
  std::string eps = "1/2";
  long long budget = kDefaultNodeBudget;
  std::string out;
};

int run_solve(const SolveArgs& a) {
  Graph g = load_graph(a.graph);
  std::ostringstream text;
  if (a.problem == "matching") {
    Matching m;
    if (a.method == "exact")
      m = max_matching_exact(g, a.budget);
    else if (a.method == "greedy")
      m = greedy_maximal_matching(g);
    else if (a.method == "approx")
      m = approx_matching_short_augment(g, Rational::parse(a.eps));
    else
      throw input_error("matching methods: exact|greedy|approx");
    save_matching(m, text);
  } else if (a.problem == "vc") {
    VertexCover c;
    if (a.method == "exact")
      c = min_vc_exact(g, a.budget);
    else if (a.method == "2approx" || a.method == "greedy")
      c = vc_from_matching(greedy_maximal_matching(g));
    else
      throw input_error("vc methods: exact|2approx");
    save_vertex_cover(c, text);
  } else if (a.problem == "is") {
    IndependentSet s;
    if (a.method == "exact")
      s = max_is_exact(g, a.budget);
    else if (a.method == "greedy")
      s = greedy_is_min_degree(g);
    else
      throw input_error("is methods: exact|greedy");
    save_independent_set(s, text);
  } else {
    throw input_error("solve problems: matching|vc|is");
  }
  write_text(a.out, text.str());
  return 0;
}

struct ProbeArgs {
  std::string graph;
  int delta = 1;
  int vertex = 0;
};

int run_probe(const ProbeArgs& a) {
  Graph g = load_graph(a.graph);
  SparsifierOracle oracle(g, a.delta);
  auto adj = oracle.sparsifier_adjacency(a.vertex);
  auto stats = oracle.probe_stats();
  std::cout << "sparsifier adjacency of " << a.vertex << ":";
  for (Vertex v : adj) std::cout << ' ' << v;
  std::cout << "\ndistinct_vertices_probed: " << stats.distinct_vertices_probed
            << "\nslot_probes: " << stats.slot_probes << '\n';
  bool high = oracle.is_in_validating_set(a.vertex);
  auto vstats = oracle.probe_stats();
  std::cout << "in_validating_set: " << (high ? "yes" : "no") << " (probed "
            << vstats.distinct_vertices_probed << " vertex)\n";
  return 0;
}

struct DistsimArgs {
  std::string graph;
  int delta = 1;
  std::string protocol = "matching";
  std::string out;
};

int run_distsim(const DistsimArgs& a) {
  Graph g = load_graph(a.graph);
  if (a.protocol == "matching") {
    auto run = run_one_round_matching_sparsifier(g, a.delta);
    auto summary = load_report(run.log);
    std::cout << "rounds: " << run.log.rounds << "\nedges: " << run.edges.size()
              << "\nmax_sent: " << summary.max_sent << "\nmean_sent: " << summary.mean_sent
              << "\nmax_received: " << summary.max_received << '\n';
    if (!a.out.empty()) {
      std::ostringstream text;
      save_graph(Graph::from_edges(g.vertex_count(), run.edges), text);
      write_text(a.out, text.str());
    }
  } else if (a.protocol == "highlow") {
    auto run = run_one_round_high_low(g, a.delta);
    auto summary = load_report(run.log);
    std::cout << "rounds: " << run.log.rounds << "\nmax_sent: " << summary.max_sent
              << "\nmean_sent: " << summary.mean_sent << '\n';
    if (!a.out.empty()) {
      std::vector<Edge> low_edges;
      for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) >= a.delta) continue;
        auto nbrs = g.neighbors(v);
        for (size_t slot = 0; slot < nbrs.size(); ++slot)
          if (run.neighbor_is_low[v][slot] && nbrs[slot] > v)
            low_edges.emplace_back(v, nbrs[slot]);
      }
      std::ostringstream text;
      save_graph(Graph::from_edges(g.vertex_count(), low_edges), text);
      write_text(a.out, text.str());
    }
  } else {
    throw input_error("protocols: matching|highlow");
  }
  return 0;
}

struct DynamicArgs {
  std::string graph;
  std::string trace;
  int random_trace = 0;
  int t = 2;
  std::string eps = "1/2";
  int alpha = 1;
  int checkpoint_every = 100;
  std::uint64_t seed = 0;
  long long budget = kDefaultNodeBudget;
  std::string out;
};

int run_dynamic(const DynamicArgs& a) {
  Graph base = load_graph(a.graph);
  std::vector<TraceStep> trace;
  if (!a.trace.empty())
    trace = load_trace(a.trace);
  else if (a.random_trace > 0)
    trace = generate_update_trace(base, a.random_trace, a.seed);
  else
    throw input_error("need --trace FILE or --random-trace N");
  auto report = run_dynamic_vc(base, trace,
                               a.t == 1 ? VcStaticSolver::Exact : VcStaticSolver::TwoApproxMatching,
                               Rational::parse(a.eps), a.alpha, a.checkpoint_every, a.budget);
  write_text(a.out, report.csv);
  std::cerr << "updates: " << trace.size() << "  rebuilds: " << report.rebuild_count
            << "  amortized_changes: " << report.stats.amortized_changes_per_update
            << "  max_scan_edges: " << report.stats.max_scan_edges
            << "  all_pass: " << (report.all_pass() ? "yes" : "no") << '\n';
  return report.all_pass() ? 0 : 1;
}

struct BenchArgs {
  std::string problem = "matching";
  int seeds = 10;
  std::vector<std::string> eps_list;
  std::string out;
  bool summary = false;
  long long budget = kDefaultNodeBudget;
};

int run_bench(const BenchArgs& a) {
  Problem problem = parse_problem(a.problem);
  std::vector<Rational> eps_values;
  if (a.eps_list.empty()) {
    eps_values = {Rational(1), Rational(1, 2), Rational(1, 3)};
  } else {
    for (const auto& s : a.eps_list) eps_values.push_back(Rational::parse(s));
  }

  std::vector<ExperimentConfig> cells;
  auto add_forest_cells = [&](std::initializer_list<int> sizes) {
    for (int n : sizes)
      for (int alpha : {1, 2, 3})
        for (const Rational& eps : eps_values)
          for (int s = 0; s < a.seeds; ++s) {
            ExperimentConfig cfg;
            cfg.problem = problem;
            cfg.generator = GeneratorSpec{GeneratorSpec::Kind::ForestUnion, n, 0, alpha};
            cfg.eps = eps;
            cfg.seed = static_cast<std::uint64_t>(s) * 7919 + n;
            cfg.node_budget = a.budget;
            cells.push_back(cfg);
          }
  };
  auto add_adversarial = [&](int star_n, int clique_n) {
    for (const Rational& eps : eps_values) {
      ExperimentConfig star;
      star.problem = problem;
      star.generator = GeneratorSpec{GeneratorSpec::Kind::Star, star_n, 0, 1};
      star.eps = eps;
      star.node_budget = a.budget;
      cells.push_back(star);
      ExperimentConfig clique;
      clique.problem = problem;
      clique.generator = GeneratorSpec{GeneratorSpec::Kind::Clique, clique_n, 0, 1};
      clique.eps = eps;
      clique.node_budget = a.budget;
      cells.push_back(clique);
    }
  };

  switch (problem) {
    case Problem::Matching:
      add_forest_cells({32, 48, 64});
      add_adversarial(64, 10);
      break;
    case Problem::VertexCoverProblem:
      for (int t : {1, 2})
        for (int n : {24, 40, 56})
          for (int alpha : {1, 2, 3})
            for (const Rational& eps : eps_values)
              for (int s = 0; s < a.seeds; ++s) {
                ExperimentConfig cfg;
                cfg.problem = problem;
                cfg.generator = GeneratorSpec{GeneratorSpec::Kind::ForestUnion, n, 0, alpha};
                cfg.eps = eps;
                cfg.t = t;
                cfg.seed = static_cast<std::uint64_t>(s) * 104729 + n;
                cfg.node_budget = a.budget;
                cells.push_back(cfg);
              }
      break;
    case Problem::IndependentSetProblem:
      for (int n : {30, 40, 50})
        for (int beta : {1, 2, 3})
          for (const Rational& eps : eps_values) {
            if (eps >= Rational(beta)) continue;
            for (int s = 0; s < a.seeds; ++s) {
              ExperimentConfig cfg;
              cfg.problem = problem;
              cfg.generator = GeneratorSpec{GeneratorSpec::Kind::RandomGraph, n,
                                            static_cast<long long>(beta) * n / 2, 1};
              cfg.eps = eps;
              cfg.seed = static_cast<std::uint64_t>(s) * 15485863 + n;
              cfg.node_budget = a.budget;
              cells.push_back(cfg);
            }
          }
      break;
    case Problem::Probe:
    case Problem::DistSim:
      add_forest_cells({32, 64});
      add_adversarial(64, 10);
      break;
    default:
      throw input_error("bench problems: matching|vc|is|probe|distsim");
  }

  std::vector<std::string> reports;
  bool all_pass = true;
  for (const auto& cfg : cells) {
    auto result = run_experiment(cfg);
    reports.push_back(result.csv);
    all_pass = all_pass && result.all_pass;
  }

  // Merge into a single CSV with one header.
  std::ostringstream merged;
  for (size_t i = 0; i < reports.size(); ++i) {
    std::istringstream in(reports[i]);
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
      if (first && i > 0) {
        first = false;
        continue;
      }
      first = false;
      merged << line << '\n';
    }
  }
  write_text(a.out, a.summary ? summarize(reports) : merged.str());
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bounded-degree sparsifiers for uniformly sparse graphs"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "generate a graph file");
  gen_cmd->add_option("--kind", gen.kind, "forest|random|star|clique");
  gen_cmd->add_option("--n", gen.n, "vertex count")->required();
  gen_cmd->add_option("--alpha", gen.alpha, "forest count for --kind forest");
  gen_cmd->add_option("--m", gen.m, "edge count for --kind random");
  gen_cmd->add_option("--seed", gen.seed, "rng seed");
  gen_cmd->add_option("--out", gen.out, "output file ('-' for stdout)");

  SparsifyArgs sp;
  auto* sp_cmd = app.add_subcommand("sparsify", "build a bounded-degree sparsifier");
  sp_cmd->add_option("--graph", sp.graph, "input edge list")->required();
  sp_cmd->add_option("--kind", sp.kind, "matching|vc|is");
  sp_cmd->add_option("--alpha", sp.alpha, "arboricity bound");
  sp_cmd->add_option("--beta", sp.beta, "average-degree bound (is)");
  sp_cmd->add_option("--eps", sp.eps, "slack parameter (rational)");
  int sp_delta = 0;
  auto* sp_delta_opt = sp_cmd->add_option("--delta-override", sp_delta, "explicit degree cap");
  sp_cmd->add_option("--out", sp.out, "output file");

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "run a solver on a graph");
  solve_cmd->add_option("--graph", solve.graph)->required();
  solve_cmd->add_option("--problem", solve.problem, "matching|vc|is");
  solve_cmd->add_option("--method", solve.method, "exact|greedy|approx|2approx");
  solve_cmd->add_option("--eps", solve.eps, "slack for --method approx");
  solve_cmd->add_option("--budget", solve.budget, "branch node budget");
  solve_cmd->add_option("--out", solve.out);

  ProbeArgs probe;
  auto* probe_cmd = app.add_subcommand("probe", "query the local sparsifier oracle");
  probe_cmd->add_option("--graph", probe.graph)->required();
  probe_cmd->add_option("--delta", probe.delta)->required();
  probe_cmd->add_option("--vertex", probe.vertex)->required();

  DistsimArgs distsim;
  auto* dist_cmd = app.add_subcommand("distsim", "one-round distributed construction");
  dist_cmd->add_option("--graph", distsim.graph)->required();
  dist_cmd->add_option("--delta", distsim.delta)->required();
  dist_cmd->add_option("--protocol", distsim.protocol, "matching|highlow");
  dist_cmd->add_option("--out", distsim.out, "write the constructed subgraph");

  DynamicArgs dyn;
  auto* dyn_cmd = app.add_subcommand("dynamic", "replay an update trace with lazy VC");
  dyn_cmd->add_option("--graph", dyn.graph, "initial graph")->required();
  dyn_cmd->add_option("--trace", dyn.trace, "trace file (+ u v / - u v)");
  dyn_cmd->add_option("--random-trace", dyn.random_trace, "generate N random toggles instead");
  dyn_cmd->add_option("--t", dyn.t, "1 = exact static solver, 2 = matching solver");
  dyn_cmd->add_option("--eps", dyn.eps);
  dyn_cmd->add_option("--alpha", dyn.alpha);
  dyn_cmd->add_option("--checkpoint-every", dyn.checkpoint_every);
  dyn_cmd->add_option("--seed", dyn.seed);
  dyn_cmd->add_option("--budget", dyn.budget);
  dyn_cmd->add_option("--out", dyn.out, "per-update CSV");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "corpus sweep that checks every row against its bound");
  bench_cmd->add_option("--problem", bench.problem, "matching|vc|is|probe|distsim");
  bench_cmd->add_option("--seeds", bench.seeds, "seeds per configuration");
  bench_cmd->add_option("--eps", bench.eps_list, "eps sweep (default 1 1/2 1/3)");
  bench_cmd->add_option("--out", bench.out, "CSV output");
  bench_cmd->add_flag("--summary", bench.summary, "aggregate per configuration");
  bench_cmd->add_option("--budget", bench.budget);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen_cmd) return run_gen(gen);
    if (*sp_cmd) {
      if (*sp_delta_opt) sp.delta_override = sp_delta;
      return run_sparsify(sp);
    }
    if (*solve_cmd) return run_solve(solve);
    if (*probe_cmd) return run_probe(probe);
    if (*dist_cmd) return run_distsim(distsim);
    if (*dyn_cmd) return run_dynamic(dyn);
    if (*bench_cmd) return run_bench(bench);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
