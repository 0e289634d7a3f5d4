#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bds/dynamic.hpp"
#include "bds/graph.hpp"
#include "bds/rational.hpp"
#include "bds/solvers.hpp"

namespace bds {

enum class Problem {
  Matching,
  VertexCoverProblem,
  IndependentSetProblem,
  DynamicVc,
  DynamicIs,
  DistSim,
  Probe,
};

// Accepts matching|vc|is|dynamic-vc|dynamic-is|distsim|probe.
Problem parse_problem(const std::string& name);

struct GeneratorSpec {
  enum class Kind { ForestUnion, RandomGraph, Star, Clique };
  Kind kind = Kind::ForestUnion;
  int n = 0;
  long long m = 0;  // RandomGraph only
  int alpha = 1;    // ForestUnion only
};

Graph build_graph(const GeneratorSpec& spec, std::uint64_t seed);

// The arboricity bound certified by the generator itself (stars and cliques
// have known values; random graphs have none and are used with beta instead).
std::optional<int> generator_alpha(const GeneratorSpec& spec);

struct ExperimentConfig {
  Problem problem = Problem::Matching;
  std::optional<std::string> graph_file;
  std::optional<GeneratorSpec> generator;  // exactly one source must be set

  // Density parameters. When a generator is used they are derived from it
  // (forest-union/star/clique => alpha, random => beta = 2m/n) so the declared
  // value can never disagree with the source.
  int alpha = 1;
  std::optional<Rational> beta;

  Rational eps = Rational(1);
  int t = 1;  // 1 = exact static solver, 2 = maximal-matching solver
  std::uint64_t seed = 0;
  int checkpoint_every = 100;
  int trace_steps = 10000;
  std::optional<int> delta_override;
  long long node_budget = kDefaultNodeBudget;
};

struct ExperimentResult {
  std::string csv;
  bool all_pass = true;
};

// One experiment cell: builds or loads the graph, runs the problem's
// pipeline, and emits one CSV report whose rows each carry the bound
// they are checked against. Oracle capability errors mark the row as not
// passed instead of aborting the run.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

std::string csv_header(Problem problem);

// Groups data rows of homogeneous reports by their configuration columns
// (n, alpha, beta, eps, t, delta, protocol, bound) and emits count, max and
// mean of the ratio column, and an all-pass flag per group.
std::string summarize(const std::vector<std::string>& csv_reports);

struct DynamicVcReport {
  std::string csv;
  bool valid_after_every_update = true;
  bool ratio_ok_at_checkpoints = true;
  bool scan_bound_ok = true;
  bool rebuild_count_ok = true;
  bool checkpoints_all_computed = true;
  long long rebuild_count = 0;
  UpdateStats stats;

  bool all_pass() const {
    return valid_after_every_update && ratio_ok_at_checkpoints && scan_bound_ok &&
           rebuild_count_ok && checkpoints_all_computed;
  }
};

// Replays a trace on top of `base` while maintaining a lazy (t+eps)-cover.
// Checkpoints compare the cover to the exact optimum against the t+2*eps
// bound; every rebuild's discovery scan is checked against (|cover|+1)*delta.
DynamicVcReport run_dynamic_vc(const Graph& base, std::span<const TraceStep> trace,
                               VcStaticSolver solver, Rational eps, int alpha,
                               int checkpoint_every,
                               long long node_budget = kDefaultNodeBudget);

struct DynamicIsReport {
  std::string csv;
  bool valid_after_every_update = true;
  bool ratio_ok_at_checkpoints = true;
  long long rebuild_count = 0;

  bool all_pass() const { return valid_after_every_update && ratio_ok_at_checkpoints; }
};

DynamicIsReport run_dynamic_is(const Graph& base, std::span<const TraceStep> trace,
                               IsStaticSolver solver, Rational eps, int checkpoint_every,
                               long long node_budget = kDefaultNodeBudget);

}  // namespace bds
