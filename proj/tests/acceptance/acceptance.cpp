// Acceptance suite: one line per criterion, nonzero exit iff any fails.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bds/distsim.hpp"
#include "bds/dynamic.hpp"
#include "bds/experiment.hpp"
#include "bds/graph.hpp"
#include "bds/local_access.hpp"
#include "bds/rng.hpp"
#include "bds/solvers.hpp"
#include "bds/sparsify.hpp"

using namespace bds;

namespace {

int failures = 0;

void report(int id, const std::string& name, bool pass, const std::string& detail) {
  std::printf("[%s] %2d. %s (%s)\n", pass ? "PASS" : "FAIL", id, name.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

int max_degree(const Graph& g) {
  int best = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) best = std::max(best, g.degree(v));
  return best;
}

struct CorpusEntry {
  Graph graph;
  int alpha;
};

// Forest-union corpus: 108 graphs, n <= 64, alpha in {1,2,3}.
std::vector<CorpusEntry> matching_corpus() {
  std::vector<CorpusEntry> corpus;
  for (int alpha : {1, 2, 3})
    for (int n : {24, 44, 64})
      for (std::uint64_t seed = 0; seed < 12; ++seed)
        corpus.push_back({generate_forest_union(n, alpha, seed * 37 + n), alpha});
  return corpus;
}

std::vector<Edge> shuffled_edges(const Graph& g, std::uint64_t seed) {
  auto edges = g.edges();
  std::mt19937_64 rng(seed);
  for (size_t i = edges.size(); i > 1; --i)
    std::swap(edges[i - 1], edges[bounded_uniform(rng, i)]);
  return edges;
}

const std::vector<Rational> kEpsPair = {Rational(1), Rational(1, 2)};

void criterion_1_matching_ratio(const std::vector<CorpusEntry>& corpus) {
  long long cells = 0, violations = 0;
  for (const auto& entry : corpus) {
    for (const Rational& eps : kEpsPair) {
      const int delta = matching_delta(entry.alpha, eps);
      auto sp = build_matching_sparsifier(entry.graph, delta);
      const int exact_g = max_matching_exact(entry.graph).size();
      const int exact_sp = max_matching_exact(sp.graph).size();
      ++cells;
      if (Rational(exact_g) > (Rational(1) + eps) * exact_sp) ++violations;
    }
  }
  report(1, "matching sparsifier ratio exact(G) <= (1+eps)*exact(G_delta)", violations == 0,
         std::to_string(corpus.size()) + " graphs, " + std::to_string(cells) + " cells, " +
             std::to_string(violations) + " violations");
}

void criterion_2_maximal_transfer(const std::vector<CorpusEntry>& corpus) {
  long long checks = 0, violations = 0;
  for (const auto& entry : corpus) {
    for (const Rational& eps : kEpsPair) {
      const int delta = matching_delta(entry.alpha, eps);
      auto sp = build_matching_sparsifier(entry.graph, delta);
      for (std::uint64_t order_seed = 0; order_seed < 3; ++order_seed) {
        auto m = order_seed == 0
                     ? greedy_maximal_matching(sp.graph)
                     : greedy_maximal_matching(sp.graph, shuffled_edges(sp.graph, order_seed));
        auto eta = eta_maximality(entry.graph, m);
        ++checks;
        if (!eta.has_value() || *eta > eps) ++violations;
      }
    }
  }
  report(2, "maximal matchings of G_delta are eps-maximal in G", violations == 0,
         std::to_string(checks) + " maximal matchings, " + std::to_string(violations) +
             " violations");
}

void criterion_3_degree_bound(const std::vector<CorpusEntry>& corpus) {
  long long builds = 0, violations = 0;
  auto check_graph = [&](const Graph& g, int alpha) {
    std::vector<Rational> eps_values = {Rational(1), Rational(1, 2), Rational(1, 3)};
    for (const Rational& eps : eps_values) {
      {
        const int delta = matching_delta(alpha, eps);
        auto sp = build_matching_sparsifier(g, delta);
        ++builds;
        if (max_degree(sp.graph) > delta) ++violations;
      }
      {
        const int delta = vc_delta(alpha, eps);
        auto sp = build_vc_sparsifier(g, delta);
        ++builds;
        if (sp.g_low.graph.vertex_count() > 0 && max_degree(sp.g_low.graph) >= delta)
          ++violations;
      }
      {
        Rational beta = std::max(Rational(1), g.average_degree());
        if (eps < beta) {
          const int delta = is_delta(beta, eps);
          auto sp = build_is_sparsifier(g, delta);
          ++builds;
          if (sp.g_low.graph.vertex_count() > 0 && max_degree(sp.g_low.graph) >= delta)
            ++violations;
        }
      }
    }
    // Small explicit caps where the threshold actually bites.
    for (int delta : {1, 2, 3, 7}) {
      auto sp = build_matching_sparsifier(g, delta);
      ++builds;
      if (max_degree(sp.graph) > delta) ++violations;
      auto vsp = build_vc_sparsifier(g, delta);
      ++builds;
      if (vsp.g_low.graph.vertex_count() > 0 && max_degree(vsp.g_low.graph) >= delta)
        ++violations;
    }
  };
  for (const auto& entry : corpus) check_graph(entry.graph, entry.alpha);
  for (int leaves : {63, 199}) {
    GeneratorSpec star{GeneratorSpec::Kind::Star, leaves + 1, 0, 1};
    check_graph(build_graph(star, 0), 1);
  }
  for (int n : {8, 12, 16}) {
    GeneratorSpec clique{GeneratorSpec::Kind::Clique, n, 0, 1};
    check_graph(build_graph(clique, 0), (n + 1) / 2);
  }
  report(3, "degree caps: G_delta <= delta, G_low < delta", violations == 0,
         std::to_string(builds) + " sparsifier builds, " + std::to_string(violations) +
             " violations");
}

std::vector<CorpusEntry> vc_corpus() {
  std::vector<CorpusEntry> corpus;
  for (int alpha : {1, 2, 3})
    for (int n : {24, 40, 56})
      for (std::uint64_t seed = 0; seed < 12; ++seed)
        corpus.push_back({generate_forest_union(n, alpha, seed * 53 + n), alpha});
  return corpus;
}

void criterion_4_vc_sparsifier(const std::vector<CorpusEntry>& corpus) {
  long long cells = 0, violations = 0;
  for (const auto& entry : corpus) {
    const int opt = min_vc_exact(entry.graph).size();
    for (const Rational& eps : kEpsPair) {
      const int delta = vc_delta(entry.alpha, eps);
      auto split = split_high_low(entry.graph, delta);
      auto sub = induced_subgraph(entry.graph, split.low);
      for (int t : {1, 2}) {
        VertexCover low_local = t == 1 ? min_vc_exact(sub.graph)
                                       : vc_from_matching(greedy_maximal_matching(sub.graph));
        VertexCover low;
        for (Vertex lv : low_local.vertices) low.vertices.push_back(sub.to_original(lv));
        auto assembled = assemble_vc(entry.graph, split, low);
        ++cells;
        if (!verify_vc(entry.graph, assembled) ||
            Rational(assembled.size()) > (Rational(t) + eps) * opt)
          ++violations;
      }
    }
  }
  report(4, "assembled covers are valid and within (t+eps) of optimum", violations == 0,
         std::to_string(corpus.size()) + " graphs, " + std::to_string(cells) + " cells, " +
             std::to_string(violations) + " violations");
}

void criterion_5_validating_excess(const std::vector<CorpusEntry>& corpus) {
  long long cells = 0, violations = 0;
  for (const auto& entry : corpus) {
    auto opt_cover = min_vc_exact(entry.graph);
    std::vector<char> in_opt(static_cast<size_t>(entry.graph.vertex_count()), 0);
    for (Vertex v : opt_cover.vertices) in_opt[v] = 1;
    for (const Rational& eps : kEpsPair) {
      const int delta = vc_delta(entry.alpha, eps);
      auto split = split_high_low(entry.graph, delta);
      int excess = 0;
      for (Vertex v : split.high)
        if (!in_opt[v]) ++excess;
      ++cells;
      if (Rational(excess) > eps * opt_cover.size()) ++violations;
    }
  }
  report(5, "validating-set excess |V_high \\ VC| <= eps*|VC|", violations == 0,
         std::to_string(cells) + " cells, " + std::to_string(violations) + " violations");
}

void criterion_6_is_sparsifier() {
  long long graphs = 0, cells = 0, violations = 0;
  for (int beta : {1, 2, 3}) {
    for (int n : {30, 40, 50}) {
      for (std::uint64_t seed = 0; seed < 7; ++seed) {
        Graph g = generate_random_graph(n, static_cast<long long>(beta) * n / 2, seed * 101 + n);
        Rational beta_bound = std::max(Rational(1), g.average_degree());
        ++graphs;
        const int exact_g = max_is_exact(g).size();
        for (const Rational& eps : {Rational(1, 2), Rational(1)}) {
          if (eps >= beta_bound) continue;
          const int delta = is_delta(beta_bound, eps);
          auto sp = build_is_sparsifier(g, delta);
          auto low_local = max_is_exact(sp.g_low.graph);
          IndependentSet lifted;
          for (Vertex lv : low_local.vertices)
            lifted.vertices.push_back(sp.g_low.to_original(lv));
          ++cells;
          if (!verify_is(g, lifted) ||
              Rational(exact_g) > (Rational(1) + eps) * low_local.size())
            ++violations;
        }
      }
    }
  }
  report(6, "independent set sparsifier exact(G) <= (1+eps)*exact(G_low)", violations == 0,
         std::to_string(graphs) + " graphs, " + std::to_string(cells) + " cells, " +
             std::to_string(violations) + " violations");
}

void criterion_7_probe_discipline(const std::vector<CorpusEntry>& corpus) {
  long long queries = 0, violations = 0;
  auto probe_graph = [&](const Graph& g, int alpha) {
    const int delta = matching_delta(alpha, Rational(1, 2));
    auto centralized = build_matching_sparsifier(g, delta);
    auto split = split_high_low(g, delta);
    SparsifierOracle oracle(g, delta);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      auto adj = oracle.sparsifier_adjacency(v);
      auto stats = oracle.probe_stats();
      auto want = centralized.graph.neighbors(v);
      ++queries;
      if (stats.distinct_vertices_probed > delta + 1 ||
          !std::equal(adj.begin(), adj.end(), want.begin(), want.end()))
        ++violations;
      if (oracle.is_in_validating_set(v) != split.is_high(v)) ++violations;
      if (oracle.probe_stats().distinct_vertices_probed != 1) ++violations;
    }
  };
  for (const auto& entry : corpus) probe_graph(entry.graph, entry.alpha);
  probe_graph(build_graph({GeneratorSpec::Kind::Star, 200, 0, 1}, 0), 1);
  report(7, "probe oracle: <= delta+1 distinct vertices, equals centralized build",
         violations == 0,
         std::to_string(queries) + " queries, " + std::to_string(violations) + " violations");
}

void criterion_8_one_round(const std::vector<CorpusEntry>& corpus) {
  long long runs = 0, violations = 0;
  auto simulate = [&](const Graph& g, int alpha) {
    const int delta = matching_delta(alpha, Rational(1, 2));
    auto run = run_one_round_matching_sparsifier(g, delta);
    auto centralized = build_matching_sparsifier(g, delta);
    ++runs;
    bool ok = run.log.rounds == 1 && run.edges == centralized.graph.edges();
    for (Vertex v = 0; v < g.vertex_count() && ok; ++v)
      if (run.log.sent[v] > delta) ok = false;
    if (!ok) ++violations;

    auto hl = run_one_round_high_low(g, delta);
    auto split = split_high_low(g, delta);
    ++runs;
    bool hl_ok = hl.log.rounds == 1;
    for (Vertex v = 0; v < g.vertex_count() && hl_ok; ++v) {
      auto nbrs = g.neighbors(v);
      for (size_t slot = 0; slot < nbrs.size(); ++slot)
        if ((hl.neighbor_is_low[v][slot] != 0) == split.is_high(nbrs[slot])) {
          hl_ok = false;
          break;
        }
    }
    if (!hl_ok) ++violations;
  };
  for (const auto& entry : corpus) simulate(entry.graph, entry.alpha);
  simulate(build_graph({GeneratorSpec::Kind::Star, 150, 0, 1}, 0), 1);
  report(8, "both protocols finish in one round and equal the centralized builds",
         violations == 0,
         std::to_string(runs) + " protocol runs, " + std::to_string(violations) + " violations");
}

void criterion_9_dynamic_vc() {
  bool all_ok = true;
  long long total_rebuilds = 0;
  std::string first_failure;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Graph base = generate_forest_union(200, 2, 1000 + seed);
    auto trace = generate_update_trace(base, 10000, 2000 + seed);
    auto rep = run_dynamic_vc(base, trace, VcStaticSolver::TwoApproxMatching, Rational(1, 2), 2,
                              100);
    total_rebuilds += rep.rebuild_count;
    if (!rep.all_pass() && first_failure.empty()) {
      first_failure = "trace " + std::to_string(seed) + ": valid=" +
                      std::to_string(rep.valid_after_every_update) +
                      " ratio=" + std::to_string(rep.ratio_ok_at_checkpoints) +
                      " scan=" + std::to_string(rep.scan_bound_ok) +
                      " rebuilds=" + std::to_string(rep.rebuild_count_ok) +
                      " checkpoints=" + std::to_string(rep.checkpoints_all_computed);
    }
    all_ok = all_ok && rep.all_pass();
  }
  report(9, "lazy dynamic VC: validity, t+2eps checkpoints, rebuild and scan bounds", all_ok,
         all_ok ? "10 traces x 10000 updates, " + std::to_string(total_rebuilds) + " rebuilds"
                : first_failure);
}

void criterion_10_oracle_consistency() {
  std::mt19937_64 seeds(271828);
  long long violations = 0;
  for (int trial = 0; trial < 100; ++trial) {
    int n = 4 + static_cast<int>(bounded_uniform(seeds, 11));
    long long max_m = static_cast<long long>(n) * (n - 1) / 2;
    Graph g = generate_random_graph(n, bounded_uniform(seeds, max_m + 1), seeds());
    if (min_vc_exact(g).size() + max_is_exact(g).size() != n) ++violations;
    if (max_matching_exact(g).size() > min_vc_exact(g).size()) ++violations;
  }
  report(10, "exact oracles: |VC|+|IS| = n and |matching| <= |VC|", violations == 0,
         "100 graphs, " + std::to_string(violations) + " violations");
}

void criterion_11_determinism(const char* cli_path) {
  // Library-level rerun.
  ExperimentConfig cfg;
  cfg.problem = Problem::DynamicVc;
  cfg.generator = GeneratorSpec{GeneratorSpec::Kind::ForestUnion, 60, 0, 2};
  cfg.eps = Rational(1, 2);
  cfg.t = 2;
  cfg.trace_steps = 500;
  cfg.seed = 5;
  bool lib_ok = run_experiment(cfg).csv == run_experiment(cfg).csv;

  // End-to-end rerun through the CLI.
  bool cli_ok = true;
  std::string detail = "library rerun byte-identical";
  if (cli_path != nullptr) {
    auto run_once = [&cli_path](const std::string& out) {
      std::string cmd = std::string(cli_path) +
                        " bench --problem matching --seeds 2 --eps 1 --out " + out;
      return std::system(cmd.c_str());
    };
    auto slurp = [](const std::string& path) {
      std::ifstream in(path, std::ios::binary);
      std::ostringstream content;
      content << in.rdbuf();
      return content.str();
    };
    int rc1 = run_once("acceptance_run1.csv");
    int rc2 = run_once("acceptance_run2.csv");
    std::string a = slurp("acceptance_run1.csv");
    std::string b = slurp("acceptance_run2.csv");
    cli_ok = rc1 == 0 && rc2 == 0 && !a.empty() && a == b;
    std::remove("acceptance_run1.csv");
    std::remove("acceptance_run2.csv");
    detail = "library and CLI reruns byte-identical";
  }
  report(11, "identical seeds produce byte-identical CSV", lib_ok && cli_ok, detail);
}

}  // namespace

int main(int argc, char** argv) {
  const char* cli_path = argc > 1 ? argv[1] : nullptr;

  auto m_corpus = matching_corpus();
  criterion_1_matching_ratio(m_corpus);
  criterion_2_maximal_transfer(m_corpus);
  criterion_3_degree_bound(m_corpus);
  auto v_corpus = vc_corpus();
  criterion_4_vc_sparsifier(v_corpus);
  criterion_5_validating_excess(v_corpus);
  criterion_6_is_sparsifier();
  criterion_7_probe_discipline(m_corpus);
  criterion_8_one_round(m_corpus);
  criterion_9_dynamic_vc();
  criterion_10_oracle_consistency();
  criterion_11_determinism(cli_path);

  if (failures == 0) {
    std::printf("acceptance: all 11 criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criteria FAILED\n", failures);
  return 1;
}
