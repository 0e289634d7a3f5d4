#include "bds/experiment.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>

#include "bds/distsim.hpp"
#include "bds/local_access.hpp"
#include "bds/sparsify.hpp"

namespace bds {

namespace {

std::string fmt_ratio(const Rational& r) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", r.to_double());
  return buf;
}

std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", x);
  return buf;
}

int max_degree(const Graph& g) {
  int best = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) best = std::max(best, g.degree(v));
  return best;
}

struct CsvWriter {
  std::ostringstream out;

  explicit CsvWriter(const std::string& header) { out << header << '\n'; }

  void row(const std::vector<std::string>& fields) {
    for (size_t i = 0; i < fields.size(); ++i) {
      if (i > 0) out << ',';
      out << fields[i];
    }
    out << '\n';
  }

  std::string str() const { return out.str(); }
};

}  // namespace

Problem parse_problem(const std::string& name) {
  if (name == "matching") return Problem::Matching;
  if (name == "vc") return Problem::VertexCoverProblem;
  if (name == "is") return Problem::IndependentSetProblem;
  if (name == "dynamic-vc") return Problem::DynamicVc;
  if (name == "dynamic-is") return Problem::DynamicIs;
  if (name == "distsim") return Problem::DistSim;
  if (name == "probe") return Problem::Probe;
  throw input_error("unknown problem '" + name +
                    "' (expected matching|vc|is|dynamic-vc|dynamic-is|distsim|probe)");
}

Graph build_graph(const GeneratorSpec& spec, std::uint64_t seed) {
  switch (spec.kind) {
    case GeneratorSpec::Kind::ForestUnion:
      return generate_forest_union(spec.n, spec.alpha, seed);
    case GeneratorSpec::Kind::RandomGraph:
      return generate_random_graph(spec.n, spec.m, seed);
    case GeneratorSpec::Kind::Star: {
      std::vector<Edge> edges;
      for (Vertex v = 1; v < spec.n; ++v) edges.emplace_back(0, v);
      return Graph::from_edges(spec.n, edges);
    }
    case GeneratorSpec::Kind::Clique: {
      std::vector<Edge> edges;
      for (Vertex u = 0; u < spec.n; ++u)
        for (Vertex v = u + 1; v < spec.n; ++v) edges.emplace_back(u, v);
      return Graph::from_edges(spec.n, edges);
    }
  }
  throw input_error("unknown generator kind");
}

std::optional<int> generator_alpha(const GeneratorSpec& spec) {
  switch (spec.kind) {
    case GeneratorSpec::Kind::ForestUnion:
      return spec.alpha;
    case GeneratorSpec::Kind::Star:
      return spec.n >= 2 ? 1 : 0;
    case GeneratorSpec::Kind::Clique:
      return (spec.n + 1) / 2;
    case GeneratorSpec::Kind::RandomGraph:
      return std::nullopt;
  }
  return std::nullopt;
}

std::string csv_header(Problem problem) {
  switch (problem) {
    case Problem::Matching:
      return "n,m,alpha,eps,delta,exact_g,exact_gdelta,ratio,bound,max_deg_gdelta,pass";
    case Problem::VertexCoverProblem:
      return "n,m,alpha,eps,t,delta,cover,opt,ratio,bound,valid,high_excess,excess_bound,"
             "excess_pass,pass";
    case Problem::IndependentSetProblem:
      return "n,m,beta,eps,delta,exact_g,exact_glow,ratio,bound,max_deg_glow,pass";
    case Problem::Probe:
      return "n,m,delta,max_distinct,distinct_budget,max_slot_probes,slot_budget,consistent,"
             "validating_ok,pass";
    case Problem::DistSim:
      return "n,m,delta,protocol,rounds,max_sent,sent_bound,matches_centralized,"
             "schedule_independent,pass";
    case Problem::DynamicVc:
    case Problem::DynamicIs:
      return "update,cover_size,opt,ratio,rebuild,changes,valid,pass";
  }
  throw input_error("unknown problem");
}

namespace {

struct LoadedInputs {
  Graph graph;
  int alpha = 1;
  Rational beta{1};
};

LoadedInputs load_inputs(const ExperimentConfig& cfg) {
  if (cfg.graph_file.has_value() == cfg.generator.has_value())
    throw input_error("exactly one of graph_file and generator must be set");
  LoadedInputs in;
  if (cfg.graph_file) {
    in.graph = load_graph(*cfg.graph_file);
    in.alpha = cfg.alpha;
    in.beta = cfg.beta.value_or(std::max(Rational(1), in.graph.average_degree()));
  } else {
    // Derived, never declared, so the density parameter cannot disagree with
    // the source.
    in.graph = build_graph(*cfg.generator, cfg.seed);
    in.alpha = generator_alpha(*cfg.generator).value_or(cfg.alpha);
    in.beta = std::max(Rational(1), in.graph.average_degree());
  }
  return in;
}

ExperimentResult run_matching_cell(const ExperimentConfig& cfg, const LoadedInputs& in) {
  const Graph& g = in.graph;
  const Rational eps_eff = std::min(cfg.eps, Rational(1));
  const int delta = cfg.delta_override ? *cfg.delta_override : matching_delta(in.alpha, cfg.eps);
  CsvWriter csv(csv_header(Problem::Matching));
  bool pass = false;
  std::string exact_g_s, exact_gd_s, ratio_s;
  auto sp = build_matching_sparsifier(g, delta);
  const int deg_cap = max_degree(sp.graph);
  const Rational bound = Rational(1) + eps_eff;
  try {
    const int exact_g = max_matching_exact(g, cfg.node_budget).size();
    const int exact_gd = max_matching_exact(sp.graph, cfg.node_budget).size();
    Rational ratio = exact_gd > 0 ? Rational(exact_g, exact_gd)
                                  : (exact_g == 0 ? Rational(1) : Rational(INT32_MAX));
    pass = ratio <= bound && deg_cap <= delta;
    exact_g_s = std::to_string(exact_g);
    exact_gd_s = std::to_string(exact_gd);
    ratio_s = fmt_ratio(ratio);
  } catch (const capability_error&) {
    pass = false;
  }
  csv.row({std::to_string(g.vertex_count()), std::to_string(g.edge_count()),
           std::to_string(in.alpha), cfg.eps.str(), std::to_string(delta), exact_g_s, exact_gd_s,
           ratio_s, fmt_ratio(bound), std::to_string(deg_cap), pass ? "1" : "0"});
  return {csv.str(), pass};
}

ExperimentResult run_vc_cell(const ExperimentConfig& cfg, const LoadedInputs& in) {
  const Graph& g = in.graph;
  const int delta = cfg.delta_override ? *cfg.delta_override : vc_delta(in.alpha, cfg.eps);
  CsvWriter csv(csv_header(Problem::VertexCoverProblem));
  bool pass = false;
  std::string cover_s, opt_s, ratio_s, high_excess_s, excess_pass_s;
  bool valid = false;
  const Rational bound = Rational(cfg.t) + cfg.eps;
  const Rational excess_slack = cfg.eps;
  std::string excess_bound_s;
  try {
    auto split = split_high_low(g, delta);
    auto sub = induced_subgraph(g, split.low);
    VertexCover low_local = cfg.t == 1
                                ? min_vc_exact(sub.graph, cfg.node_budget)
                                : vc_from_matching(greedy_maximal_matching(sub.graph));
    VertexCover low;
    for (Vertex lv : low_local.vertices) low.vertices.push_back(sub.to_original(lv));
    VertexCover assembled = assemble_vc(g, split, low);
    valid = verify_vc(g, assembled);

    VertexCover opt_cover = min_vc_exact(g, cfg.node_budget);
    const int opt = opt_cover.size();
    Rational ratio = opt > 0 ? Rational(assembled.size(), opt)
                             : (assembled.size() == 0 ? Rational(1) : Rational(INT32_MAX));

    std::vector<char> in_opt(static_cast<size_t>(g.vertex_count()), 0);
    for (Vertex v : opt_cover.vertices) in_opt[v] = 1;
    int high_excess = 0;
    for (Vertex v : split.high)
      if (!in_opt[v]) ++high_excess;
    const Rational excess_bound = excess_slack * opt;
    const bool excess_pass = Rational(high_excess) <= excess_bound;

    pass = valid && ratio <= bound && excess_pass;
    cover_s = std::to_string(assembled.size());
    opt_s = std::to_string(opt);
    ratio_s = fmt_ratio(ratio);
    high_excess_s = std::to_string(high_excess);
    excess_bound_s = fmt_ratio(excess_bound);
    excess_pass_s = excess_pass ? "1" : "0";
  } catch (const capability_error&) {
    pass = false;
  }
  csv.row({std::to_string(g.vertex_count()), std::to_string(g.edge_count()),
           std::to_string(in.alpha), cfg.eps.str(), std::to_string(cfg.t), std::to_string(delta),
           cover_s, opt_s, ratio_s, fmt_ratio(bound), valid ? "1" : "0", high_excess_s,
           excess_bound_s, excess_pass_s, pass ? "1" : "0"});
  return {csv.str(), pass};
}

ExperimentResult run_is_cell(const ExperimentConfig& cfg, const LoadedInputs& in) {
  const Graph& g = in.graph;
  const int delta = cfg.delta_override ? *cfg.delta_override : is_delta(in.beta, cfg.eps);
  CsvWriter csv(csv_header(Problem::IndependentSetProblem));
  bool pass = false;
  std::string exact_g_s, exact_glow_s, ratio_s;
  auto sp = build_is_sparsifier(g, delta);
  const int deg_cap = max_degree(sp.g_low.graph);
  const Rational bound = Rational(1) + cfg.eps;
  try {
    const int exact_g = max_is_exact(g, cfg.node_budget).size();
    IndependentSet low_local = max_is_exact(sp.g_low.graph, cfg.node_budget);
    IndependentSet lifted;
    for (Vertex lv : low_local.vertices) lifted.vertices.push_back(sp.g_low.to_original(lv));
    const bool lifted_valid = verify_is(g, lifted);
    const int exact_glow = low_local.size();
    Rational ratio = exact_glow > 0 ? Rational(exact_g, exact_glow)
                                    : (exact_g == 0 ? Rational(1) : Rational(INT32_MAX));
    pass = lifted_valid && ratio <= bound && deg_cap < delta;
    exact_g_s = std::to_string(exact_g);
    exact_glow_s = std::to_string(exact_glow);
    ratio_s = fmt_ratio(ratio);
  } catch (const capability_error&) {
    pass = false;
  }
  csv.row({std::to_string(g.vertex_count()), std::to_string(g.edge_count()), in.beta.str(),
           cfg.eps.str(), std::to_string(delta), exact_g_s, exact_glow_s, ratio_s,
           fmt_ratio(bound), std::to_string(deg_cap), pass ? "1" : "0"});
  return {csv.str(), pass};
}

ExperimentResult run_probe_cell(const ExperimentConfig& cfg, const LoadedInputs& in) {
  const Graph& g = in.graph;
  const int delta = cfg.delta_override ? *cfg.delta_override : matching_delta(in.alpha, cfg.eps);
  auto centralized = build_matching_sparsifier(g, delta);
  auto split = split_high_low(g, delta);
  SparsifierOracle oracle(g, delta);

  long long max_distinct = 0, max_slots = 0;
  bool consistent = true, validating_ok = true;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto adj = oracle.sparsifier_adjacency(v);
    auto stats = oracle.probe_stats();
    max_distinct = std::max(max_distinct, stats.distinct_vertices_probed);
    max_slots = std::max(max_slots, stats.slot_probes);
    auto want = centralized.graph.neighbors(v);
    if (!std::equal(adj.begin(), adj.end(), want.begin(), want.end())) consistent = false;
    if (oracle.is_in_validating_set(v) != split.is_high(v)) validating_ok = false;
    auto vstats = oracle.probe_stats();
    if (vstats.distinct_vertices_probed != 1) validating_ok = false;
  }
  const long long distinct_budget = delta + 1;
  const long long slot_budget = static_cast<long long>(delta) * (delta + 1) + delta;
  const bool pass =
      consistent && validating_ok && max_distinct <= distinct_budget && max_slots <= slot_budget;

  CsvWriter csv(csv_header(Problem::Probe));
  csv.row({std::to_string(g.vertex_count()), std::to_string(g.edge_count()),
           std::to_string(delta), std::to_string(max_distinct), std::to_string(distinct_budget),
           std::to_string(max_slots), std::to_string(slot_budget), consistent ? "1" : "0",
           validating_ok ? "1" : "0", pass ? "1" : "0"});
  return {csv.str(), pass};
}

ExperimentResult run_distsim_cell(const ExperimentConfig& cfg, const LoadedInputs& in) {
  const Graph& g = in.graph;
  const int delta = cfg.delta_override ? *cfg.delta_override : matching_delta(in.alpha, cfg.eps);
  const int n = g.vertex_count();
  std::vector<Vertex> reversed(static_cast<size_t>(n));
  for (Vertex v = 0; v < n; ++v) reversed[v] = n - 1 - v;

  CsvWriter csv(csv_header(Problem::DistSim));
  bool all_pass = true;

  {
    auto run = run_one_round_matching_sparsifier(g, delta);
    auto rerun = run_one_round_matching_sparsifier(g, delta, reversed);
    auto centralized = build_matching_sparsifier(g, delta);
    auto summary = load_report(run.log);
    bool matches = run.edges == centralized.graph.edges();
    bool schedule_independent = run.edges == rerun.edges && run.log.sent == rerun.log.sent &&
                                run.log.received == rerun.log.received;
    bool received_ok = true;
    for (Vertex v = 0; v < n; ++v)
      if (run.log.received[v] > g.degree(v)) received_ok = false;
    bool pass = run.log.rounds == 1 && summary.max_sent <= delta && matches &&
                schedule_independent && received_ok;
    all_pass = all_pass && pass;
    csv.row({std::to_string(n), std::to_string(g.edge_count()), std::to_string(delta), "matching",
             std::to_string(run.log.rounds), std::to_string(summary.max_sent),
             std::to_string(delta), matches ? "1" : "0", schedule_independent ? "1" : "0",
             pass ? "1" : "0"});
  }
  {
    auto run = run_one_round_high_low(g, delta);
    auto rerun = run_one_round_high_low(g, delta, reversed);
    auto summary = load_report(run.log);
    // Reconstruct G_low from local knowledge and compare to the centralized
    // split.
    auto split = split_high_low(g, delta);
    auto sub = induced_subgraph(g, split.low);
    std::vector<Edge> reconstructed;
    for (Vertex v = 0; v < n; ++v) {
      if (g.degree(v) >= delta) continue;
      auto nbrs = g.neighbors(v);
      for (size_t slot = 0; slot < nbrs.size(); ++slot)
        if (run.neighbor_is_low[v][slot] && nbrs[slot] > v)
          reconstructed.emplace_back(v, nbrs[slot]);
    }
    std::sort(reconstructed.begin(), reconstructed.end());
    std::vector<Edge> centralized_low;
    for (const Edge& e : sub.graph.edges())
      centralized_low.emplace_back(sub.to_original(e.u), sub.to_original(e.v));
    std::sort(centralized_low.begin(), centralized_low.end());
    bool matches = reconstructed == centralized_low;
    bool schedule_independent =
        run.neighbor_is_low == rerun.neighbor_is_low && run.log.sent == rerun.log.sent;
    bool sent_ok = true;
    for (Vertex v = 0; v < n; ++v)
      if (run.log.sent[v] != g.degree(v)) sent_ok = false;
    bool pass = run.log.rounds == 1 && matches && schedule_independent && sent_ok;
    all_pass = all_pass && pass;
    csv.row({std::to_string(n), std::to_string(g.edge_count()), std::to_string(delta), "highlow",
             std::to_string(run.log.rounds), std::to_string(summary.max_sent),
             std::to_string(max_degree(g)), matches ? "1" : "0",
             schedule_independent ? "1" : "0", pass ? "1" : "0"});
  }
  return {csv.str(), all_pass};
}

bool cover_flags_valid(const DynamicGraph& dg, const std::vector<char>& flags) {
  for (Vertex u = 0; u < dg.vertex_count(); ++u) {
    if (flags[u]) continue;
    for (Vertex w : dg.neighbors(u))
      if (u < w && !flags[w]) return false;
  }
  return true;
}

bool iset_flags_valid(const DynamicGraph& dg, const std::vector<char>& flags) {
  for (Vertex u = 0; u < dg.vertex_count(); ++u) {
    if (!flags[u]) continue;
    for (Vertex w : dg.neighbors(u))
      if (u < w && flags[w]) return false;
  }
  return true;
}

}  // namespace

DynamicVcReport run_dynamic_vc(const Graph& base, std::span<const TraceStep> trace,
                               VcStaticSolver solver, Rational eps, int alpha,
                               int checkpoint_every, long long node_budget) {
  DynamicGraph dg(base);
  LazyVcState st = lazy_vc_init(dg, solver, eps, alpha, node_budget);
  const long long init_epoch = st.epoch_length;
  const Rational bound = Rational(st.t) + eps * 2;

  DynamicVcReport report;
  CsvWriter csv(csv_header(Problem::DynamicVc));
  size_t rebuilds_seen = 0;

  for (size_t i = 0; i < trace.size(); ++i) {
    const TraceStep& step = trace[i];
    if (step.op == EdgeOp::Insert)
      dg.insert_edge(step.u, step.v);
    else
      dg.delete_edge(step.u, step.v);
    auto changes = lazy_vc_update(st, step.op, step.u, step.v);

    const bool rebuilt = st.rebuilds.size() > rebuilds_seen;
    if (rebuilt) {
      for (; rebuilds_seen < st.rebuilds.size(); ++rebuilds_seen) {
        const RebuildRecord& r = st.rebuilds[rebuilds_seen];
        if (r.scan_edges > static_cast<long long>(r.cover_size_before + 1) * st.delta)
          report.scan_bound_ok = false;
      }
    }

    const bool valid = cover_flags_valid(dg, st.in_cover);
    if (!valid) report.valid_after_every_update = false;

    std::string opt_s, ratio_s;
    bool row_pass = valid;
    if (checkpoint_every > 0 && (i + 1) % static_cast<size_t>(checkpoint_every) == 0) {
      try {
        const int opt = min_vc_exact(dg.snapshot(), node_budget).size();
        Rational ratio = opt > 0 ? Rational(st.cover_size, opt)
                                 : (st.cover_size == 0 ? Rational(1) : Rational(INT32_MAX));
        const bool ratio_ok = ratio <= bound;
        if (!ratio_ok) report.ratio_ok_at_checkpoints = false;
        row_pass = row_pass && ratio_ok;
        opt_s = std::to_string(opt);
        ratio_s = fmt_ratio(ratio);
      } catch (const capability_error&) {
        report.checkpoints_all_computed = false;
        row_pass = false;
      }
    }
    csv.row({std::to_string(i + 1), std::to_string(st.cover_size), opt_s, ratio_s,
             rebuilt ? "1" : "0", std::to_string(changes.size()), valid ? "1" : "0",
             row_pass ? "1" : "0"});
  }

  // Every epoch that ended consumed at least max(1, its length) updates.
  long long min_epoch = std::max<long long>(1, init_epoch);
  for (size_t i = 0; i + 1 < st.rebuilds.size(); ++i)
    min_epoch = std::min(min_epoch, std::max<long long>(1, st.rebuilds[i].epoch_length_set));
  const long long rebuild_limit =
      static_cast<long long>(trace.size()) / std::max<long long>(1, min_epoch) + 1;
  report.rebuild_count = st.rebuild_count;
  report.rebuild_count_ok = st.rebuild_count <= rebuild_limit;
  report.stats = update_stats(st);
  report.csv = csv.str();
  return report;
}

DynamicIsReport run_dynamic_is(const Graph& base, std::span<const TraceStep> trace,
                               IsStaticSolver solver, Rational eps, int checkpoint_every,
                               long long node_budget) {
  DynamicGraph dg(base);
  LazyIsState st = lazy_is_init(dg, solver, eps, node_budget);
  const Rational bound = (Rational(1) + eps * 2) * st.t;

  DynamicIsReport report;
  CsvWriter csv(csv_header(Problem::DynamicIs));
  long long rebuilds_seen = 0;

  for (size_t i = 0; i < trace.size(); ++i) {
    const TraceStep& step = trace[i];
    if (step.op == EdgeOp::Insert)
      dg.insert_edge(step.u, step.v);
    else
      dg.delete_edge(step.u, step.v);
    auto changes = lazy_is_update(st, step.op, step.u, step.v);
    const bool rebuilt = st.rebuild_count > rebuilds_seen;
    rebuilds_seen = st.rebuild_count;

    const bool valid = iset_flags_valid(dg, st.in_set);
    if (!valid) report.valid_after_every_update = false;

    std::string opt_s, ratio_s;
    bool row_pass = valid;
    if (checkpoint_every > 0 && (i + 1) % static_cast<size_t>(checkpoint_every) == 0 &&
        solver == IsStaticSolver::Exact) {
      try {
        const int opt = max_is_exact(dg.snapshot(), node_budget).size();
        Rational ratio = st.set_size > 0 ? Rational(opt, st.set_size)
                                         : (opt == 0 ? Rational(1) : Rational(INT32_MAX));
        const bool ratio_ok = ratio <= bound;
        if (!ratio_ok) report.ratio_ok_at_checkpoints = false;
        row_pass = row_pass && ratio_ok;
        opt_s = std::to_string(opt);
        ratio_s = fmt_ratio(ratio);
      } catch (const capability_error&) {
        report.ratio_ok_at_checkpoints = false;
        row_pass = false;
      }
    }
    csv.row({std::to_string(i + 1), std::to_string(st.set_size), opt_s, ratio_s,
             rebuilt ? "1" : "0", std::to_string(changes.size()), valid ? "1" : "0",
             row_pass ? "1" : "0"});
  }
  report.rebuild_count = st.rebuild_count;
  report.csv = csv.str();
  return report;
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  LoadedInputs in = load_inputs(cfg);
  switch (cfg.problem) {
    case Problem::Matching:
      return run_matching_cell(cfg, in);
    case Problem::VertexCoverProblem:
      return run_vc_cell(cfg, in);
    case Problem::IndependentSetProblem:
      return run_is_cell(cfg, in);
    case Problem::Probe:
      return run_probe_cell(cfg, in);
    case Problem::DistSim:
      return run_distsim_cell(cfg, in);
    case Problem::DynamicVc: {
      auto trace = generate_update_trace(in.graph, cfg.trace_steps, cfg.seed + 1);
      auto report =
          run_dynamic_vc(in.graph, trace, cfg.t == 1 ? VcStaticSolver::Exact
                                                     : VcStaticSolver::TwoApproxMatching,
                         cfg.eps, in.alpha, cfg.checkpoint_every, cfg.node_budget);
      return {report.csv, report.all_pass()};
    }
    case Problem::DynamicIs: {
      auto trace = generate_update_trace(in.graph, cfg.trace_steps, cfg.seed + 1);
      auto report = run_dynamic_is(in.graph, trace, IsStaticSolver::Exact, cfg.eps,
                                   cfg.checkpoint_every, cfg.node_budget);
      return {report.csv, report.all_pass()};
    }
  }
  throw input_error("unknown problem");
}

std::string summarize(const std::vector<std::string>& csv_reports) {
  static const std::vector<std::string> kConfigColumns = {"n",  "alpha", "beta",     "eps",
                                                          "t",  "delta", "protocol", "bound"};
  if (csv_reports.empty()) return "rows,max_ratio,mean_ratio,all_pass\n";

  auto split_line = [](const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
      if (c == ',') {
        fields.push_back(cur);
        cur.clear();
      } else if (c != '\r') {
        cur += c;
      }
    }
    fields.push_back(cur);
    return fields;
  };

  std::string header;
  std::vector<std::vector<std::string>> rows;
  for (const std::string& report : csv_reports) {
    std::istringstream in(report);
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      if (first) {
        first = false;
        if (header.empty())
          header = line;
        else if (header != line)
          throw input_error("summarize needs reports with identical headers");
        continue;
      }
      rows.push_back(split_line(line));
    }
  }

  auto columns = split_line(header);
  std::vector<size_t> key_idx;
  for (const auto& name : kConfigColumns) {
    auto it = std::find(columns.begin(), columns.end(), name);
    if (it != columns.end()) key_idx.push_back(static_cast<size_t>(it - columns.begin()));
  }
  auto find_col = [&columns](const std::string& name) -> int {
    auto it = std::find(columns.begin(), columns.end(), name);
    return it == columns.end() ? -1 : static_cast<int>(it - columns.begin());
  };
  const int ratio_idx = find_col("ratio");
  const int pass_idx = find_col("pass");

  struct Agg {
    long long rows = 0;
    long long ratio_rows = 0;
    double max_ratio = 0.0;
    double sum_ratio = 0.0;
    bool all_pass = true;
  };
  std::map<std::vector<std::string>, Agg> groups;
  for (const auto& row : rows) {
    std::vector<std::string> key;
    for (size_t idx : key_idx) key.push_back(idx < row.size() ? row[idx] : "");
    Agg& agg = groups[key];
    ++agg.rows;
    if (ratio_idx >= 0 && static_cast<size_t>(ratio_idx) < row.size() &&
        !row[ratio_idx].empty()) {
      double r = std::stod(row[ratio_idx]);
      agg.max_ratio = std::max(agg.max_ratio, r);
      agg.sum_ratio += r;
      ++agg.ratio_rows;
    }
    if (pass_idx >= 0 && static_cast<size_t>(pass_idx) < row.size() && row[pass_idx] != "1")
      agg.all_pass = false;
  }

  std::ostringstream out;
  for (size_t i = 0; i < key_idx.size(); ++i) out << columns[key_idx[i]] << ',';
  out << "rows,max_ratio,mean_ratio,all_pass\n";
  for (const auto& [key, agg] : groups) {
    for (const auto& k : key) out << k << ',';
    out << agg.rows << ',';
    if (agg.ratio_rows > 0)
      out << fmt_double(agg.max_ratio) << ',' << fmt_double(agg.sum_ratio / agg.ratio_rows);
    else
      out << ',';
    out << ',' << (agg.all_pass ? "1" : "0") << '\n';
  }
  return out.str();
}

}  // namespace bds
