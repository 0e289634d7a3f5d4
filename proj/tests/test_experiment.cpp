#include "bds/experiment.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "bds/sparsify.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace bds;
using namespace bds::testing;

namespace {

ExperimentConfig forest_cell(Problem problem, int n, int alpha, Rational eps,
                             std::uint64_t seed) {
  ExperimentConfig cfg;
  cfg.problem = problem;
  cfg.generator = GeneratorSpec{GeneratorSpec::Kind::ForestUnion, n, 0, alpha};
  cfg.eps = eps;
  cfg.seed = seed;
  return cfg;
}

}  // namespace

TEST_CASE("problem names") {
  CHECK(parse_problem("matching") == Problem::Matching);
  CHECK(parse_problem("dynamic-vc") == Problem::DynamicVc);
  CHECK_THROWS_AS(parse_problem("nope"), input_error);
}

TEST_CASE("matching cell emits the documented columns and passes") {
  auto result = run_experiment(forest_cell(Problem::Matching, 60, 1, Rational(1), 3));
  CHECK(result.all_pass);
  std::istringstream in(result.csv);
  std::string header, row;
  REQUIRE(std::getline(in, header));
  CHECK(header == "n,m,alpha,eps,delta,exact_g,exact_gdelta,ratio,bound,max_deg_gdelta,pass");
  REQUIRE(std::getline(in, row));
  CHECK(row.substr(0, 3) == "60,");
  CHECK(row.back() == '1');
}

TEST_CASE("vc cell ratio 1 on a star with t=1") {
  ExperimentConfig cfg;
  cfg.problem = Problem::VertexCoverProblem;
  cfg.generator = GeneratorSpec{GeneratorSpec::Kind::Star, 20, 0, 1};
  cfg.eps = Rational(1);
  cfg.t = 1;
  auto result = run_experiment(cfg);
  CHECK(result.all_pass);
  CHECK(result.csv.find(",1.000000,") != std::string::npos);  // ratio column
}

TEST_CASE("experiments read graph files with a declared alpha") {
  std::string path = "experiment_star_tmp.el";
  {
    std::ofstream out(path);
    save_graph(star_graph(20), out);
  }
  ExperimentConfig cfg;
  cfg.problem = Problem::VertexCoverProblem;
  cfg.graph_file = path;
  cfg.alpha = 1;
  cfg.eps = Rational(1);
  cfg.t = 1;
  auto result = run_experiment(cfg);
  CHECK(result.all_pass);
  std::remove(path.c_str());

  ExperimentConfig both = cfg;
  both.generator = GeneratorSpec{GeneratorSpec::Kind::Star, 20, 0, 1};
  CHECK_THROWS_AS(run_experiment(both), input_error);
  ExperimentConfig neither;
  CHECK_THROWS_AS(run_experiment(neither), input_error);
}

TEST_CASE("is, probe and distsim cells pass on small inputs") {
  ExperimentConfig is_cfg;
  is_cfg.problem = Problem::IndependentSetProblem;
  is_cfg.generator = GeneratorSpec{GeneratorSpec::Kind::RandomGraph, 40, 40, 1};
  is_cfg.eps = Rational(1);
  CHECK(run_experiment(is_cfg).all_pass);

  CHECK(run_experiment(forest_cell(Problem::Probe, 40, 2, Rational(1), 5)).all_pass);
  CHECK(run_experiment(forest_cell(Problem::DistSim, 40, 2, Rational(1), 5)).all_pass);

  ExperimentConfig star_probe;
  star_probe.problem = Problem::Probe;
  star_probe.generator = GeneratorSpec{GeneratorSpec::Kind::Star, 100, 0, 1};
  star_probe.eps = Rational(1);
  star_probe.delta_override = 5;
  CHECK(run_experiment(star_probe).all_pass);
}

TEST_CASE("experiment reruns are byte-identical") {
  for (Problem p : {Problem::Matching, Problem::VertexCoverProblem, Problem::DistSim}) {
    auto a = run_experiment(forest_cell(p, 40, 2, Rational(1, 2), 11));
    auto b = run_experiment(forest_cell(p, 40, 2, Rational(1, 2), 11));
    CHECK(a.csv == b.csv);
  }
  ExperimentConfig dyn = forest_cell(Problem::DynamicVc, 40, 2, Rational(1, 2), 11);
  dyn.t = 2;
  dyn.trace_steps = 300;
  dyn.checkpoint_every = 100;
  auto a = run_experiment(dyn);
  auto b = run_experiment(dyn);
  CHECK(a.csv == b.csv);
  CHECK(a.all_pass);
}

TEST_CASE("dynamic vc run on a small trace") {
  Graph base = generate_forest_union(60, 2, 8);
  auto trace = generate_update_trace(base, 600, 3);
  auto report = run_dynamic_vc(base, trace, VcStaticSolver::TwoApproxMatching, Rational(1, 2), 2,
                               100);
  CHECK(report.valid_after_every_update);
  CHECK(report.ratio_ok_at_checkpoints);
  CHECK(report.scan_bound_ok);
  CHECK(report.rebuild_count_ok);
  CHECK(report.checkpoints_all_computed);
  CHECK(report.rebuild_count > 0);
  // One CSV row per update plus the header.
  long long lines = std::count(report.csv.begin(), report.csv.end(), '\n');
  CHECK(lines == 601);
}

TEST_CASE("dynamic is run on a small trace") {
  Graph base = generate_random_graph(40, 40, 6);
  auto trace = generate_update_trace(base, 400, 4);
  auto report = run_dynamic_is(base, trace, IsStaticSolver::Exact, Rational(1, 2), 80);
  CHECK(report.valid_after_every_update);
  CHECK(report.ratio_ok_at_checkpoints);

  ExperimentConfig cfg;
  cfg.problem = Problem::DynamicIs;
  cfg.generator = GeneratorSpec{GeneratorSpec::Kind::RandomGraph, 30, 30, 1};
  cfg.eps = Rational(1, 2);
  cfg.trace_steps = 200;
  cfg.checkpoint_every = 50;
  auto cell = run_experiment(cfg);
  CHECK(cell.all_pass);
  CHECK(cell.csv.find("update,cover_size,opt,ratio,rebuild,changes,valid,pass") == 0);
}

TEST_CASE("summarize aggregates by configuration") {
  auto r1 = run_experiment(forest_cell(Problem::Matching, 32, 1, Rational(1), 1));
  auto r2 = run_experiment(forest_cell(Problem::Matching, 32, 1, Rational(1), 2));
  auto r3 = run_experiment(forest_cell(Problem::Matching, 48, 2, Rational(1), 3));
  auto table = summarize({r1.csv, r2.csv, r3.csv});
  std::istringstream in(table);
  std::string header;
  REQUIRE(std::getline(in, header));
  CHECK(header == "n,alpha,eps,delta,bound,rows,max_ratio,mean_ratio,all_pass");
  int rows = 0;
  std::string line;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 2);  // two distinct (n, alpha) cells
  CHECK(table.find("2,") != std::string::npos);

  CHECK(summarize({}) == "rows,max_ratio,mean_ratio,all_pass\n");

  auto single = summarize({r1.csv});
  std::istringstream sin(single);
  std::getline(sin, header);
  std::getline(sin, line);
  CHECK(line.find("32,1,1,") == 0);

  CHECK_THROWS_AS(summarize({r1.csv, "different,header\n1,2\n"}), input_error);
}

TEST_CASE("sparsifier header read-back") {
  Graph star = star_graph(10);
  auto sp = build_vc_sparsifier(star, 4);
  std::string path = "vc_sparsifier_tmp.el";
  {
    std::ofstream out(path);
    save_vc_sparsifier(sp, star.vertex_count(), out);
  }
  auto header = read_sparsifier_header(path);
  REQUIRE(header.delta.has_value());
  CHECK(*header.delta == 4);
  CHECK(header.validating_set == std::vector<Vertex>{0});
  Graph back = load_graph(path);
  CHECK(back.vertex_count() == 10 + 1);
  CHECK(back.edge_count() == 0);
  std::remove(path.c_str());
}
