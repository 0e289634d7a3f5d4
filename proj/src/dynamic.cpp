#include "bds/dynamic.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "bds/rng.hpp"
#include "bds/sparsify.hpp"

namespace bds {

DynamicGraph::DynamicGraph(const Graph& initial)
    : adj_(static_cast<size_t>(initial.vertex_count())), m_(initial.edge_count()) {
  for (Vertex v = 0; v < initial.vertex_count(); ++v) {
    auto nbrs = initial.neighbors(v);
    adj_[v].assign(nbrs.begin(), nbrs.end());
  }
}

void DynamicGraph::check_vertex(Vertex v) const {
  if (v < 0 || v >= vertex_count())
    throw input_error("vertex id " + std::to_string(v) + " out of range");
}

int DynamicGraph::degree(Vertex v) const {
  check_vertex(v);
  return static_cast<int>(adj_[v].size());
}

bool DynamicGraph::has_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::span<const Vertex> DynamicGraph::neighbors(Vertex v) const {
  check_vertex(v);
  return adj_[v];
}

void DynamicGraph::insert_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw input_error("self-loop insert");
  auto it = std::lower_bound(adj_[u].begin(), adj_[u].end(), v);
  if (it != adj_[u].end() && *it == v)
    throw input_error("insert of existing edge (" + std::to_string(u) + ", " +
                      std::to_string(v) + ")");
  adj_[u].insert(it, v);
  adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
  ++m_;
  ++updates_;
}

void DynamicGraph::delete_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  auto it = std::lower_bound(adj_[u].begin(), adj_[u].end(), v);
  if (it == adj_[u].end() || *it != v)
    throw input_error("delete of missing edge (" + std::to_string(u) + ", " +
                      std::to_string(v) + ")");
  adj_[u].erase(it);
  adj_[v].erase(std::lower_bound(adj_[v].begin(), adj_[v].end(), u));
  --m_;
  ++updates_;
}

Graph DynamicGraph::snapshot() const {
  std::vector<Edge> edges;
  edges.reserve(static_cast<size_t>(m_));
  for (Vertex u = 0; u < vertex_count(); ++u)
    for (Vertex v : adj_[u])
      if (u < v) edges.emplace_back(u, v);
  return Graph::from_edges(vertex_count(), edges);
}

HighLowTracker::HighLowTracker(const DynamicGraph& dg, int delta)
    : dg_(&dg), delta_(delta), high_(static_cast<size_t>(dg.vertex_count()), 0) {
  if (delta < 1) throw input_error("delta must be >= 1");
  for (Vertex v = 0; v < dg.vertex_count(); ++v)
    high_[v] = dg.degree(v) >= delta ? 1 : 0;
}

void HighLowTracker::on_update(Vertex u, Vertex v) {
  high_[u] = dg_->degree(u) >= delta_ ? 1 : 0;
  high_[v] = dg_->degree(v) >= delta_ ? 1 : 0;
}

std::vector<Vertex> HighLowTracker::high_vertices() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < static_cast<Vertex>(high_.size()); ++v)
    if (high_[v]) out.push_back(v);
  return out;
}

VertexCover LazyVcState::cover() const {
  VertexCover c;
  for (Vertex v = 0; v < static_cast<Vertex>(in_cover.size()); ++v)
    if (in_cover[v]) c.vertices.push_back(v);
  return c;
}

namespace {

// Solve the vertex cover problem on a sub-problem given by explicit edges in
// the base id space.
std::vector<Vertex> solve_vc_subproblem(std::vector<Edge> edges, VcStaticSolver solver,
                                        long long node_budget) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  std::vector<Vertex> verts;
  verts.reserve(edges.size() * 2);
  for (const Edge& e : edges) {
    verts.push_back(e.u);
    verts.push_back(e.v);
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());

  std::vector<Edge> local_edges;
  local_edges.reserve(edges.size());
  auto local_id = [&verts](Vertex v) {
    return static_cast<Vertex>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
  };
  for (const Edge& e : edges) local_edges.emplace_back(local_id(e.u), local_id(e.v));
  Graph local = Graph::from_edges(static_cast<int>(verts.size()), local_edges);

  VertexCover local_cover;
  if (solver == VcStaticSolver::Exact)
    local_cover = min_vc_exact(local, node_budget);
  else
    local_cover = vc_from_matching(greedy_maximal_matching(local));

  std::vector<Vertex> cover;
  cover.reserve(local_cover.vertices.size());
  for (Vertex lv : local_cover.vertices) cover.push_back(verts[static_cast<size_t>(lv)]);
  return cover;
}

long long vc_epoch_length(const Rational& eps, int cover_size) {
  return (eps / 4 * cover_size).floor();
}

// Replace the cover by V_high united with a fresh t-cover of G_low, where
// G_low is discovered by scanning low-degree cover vertices only.
std::vector<CoverChange> rebuild_vc(LazyVcState& st) {
  const DynamicGraph& dg = *st.dg;
  RebuildRecord record;
  record.update_index = st.updates_seen;
  record.cover_size_before = st.cover_size;

  std::vector<Edge> low_edges;
  for (Vertex v = 0; v < dg.vertex_count(); ++v) {
    if (!st.in_cover[v] || dg.degree(v) >= st.delta) continue;
    record.scan_edges += dg.degree(v);
    for (Vertex w : dg.neighbors(v))
      if (dg.degree(w) < st.delta) low_edges.emplace_back(v, w);
  }
  auto low_cover =
      solve_vc_subproblem(std::move(low_edges), st.solver, st.node_budget);

  std::vector<char> next(static_cast<size_t>(dg.vertex_count()), 0);
  int next_size = 0;
  for (Vertex v : low_cover)
    if (!next[v]) {
      next[v] = 1;
      ++next_size;
    }
  for (Vertex v = 0; v < dg.vertex_count(); ++v)
    if (st.tracker.is_high(v) && !next[v]) {
      next[v] = 1;
      ++next_size;
    }

  std::vector<CoverChange> changes;
  for (Vertex v = 0; v < dg.vertex_count(); ++v) {
    if (st.in_cover[v] != next[v]) changes.push_back({v, next[v] != 0});
  }
  st.in_cover = std::move(next);
  st.cover_size = next_size;
  st.epoch_length = vc_epoch_length(st.eps, st.cover_size);
  st.epoch_remaining = st.epoch_length;
  ++st.rebuild_count;

  record.cover_size_after = st.cover_size;
  record.epoch_length_set = st.epoch_length;
  st.rebuilds.push_back(record);
  return changes;
}

}  // namespace

LazyVcState lazy_vc_init(DynamicGraph& dg, VcStaticSolver solver, Rational eps, int alpha,
                         long long node_budget) {
  if (!eps.is_positive()) throw input_error("eps must be positive");
  LazyVcState st;
  st.dg = &dg;
  st.solver = solver;
  st.t = solver == VcStaticSolver::Exact ? 1 : 2;
  st.eps = eps;
  st.alpha = alpha;
  st.delta = vc_delta(alpha, eps);
  st.node_budget = node_budget;
  st.tracker = HighLowTracker(dg, st.delta);

  // Initial cover from the full split, not from a previous cover.
  std::vector<Edge> low_edges;
  for (Vertex v = 0; v < dg.vertex_count(); ++v) {
    if (dg.degree(v) >= st.delta) continue;
    for (Vertex w : dg.neighbors(v))
      if (w > v && dg.degree(w) < st.delta) low_edges.emplace_back(v, w);
  }
  auto low_cover =
      solve_vc_subproblem(std::move(low_edges), solver, node_budget);

  st.in_cover.assign(static_cast<size_t>(dg.vertex_count()), 0);
  for (Vertex v : low_cover)
    if (!st.in_cover[v]) {
      st.in_cover[v] = 1;
      ++st.cover_size;
    }
  for (Vertex v = 0; v < dg.vertex_count(); ++v)
    if (st.tracker.is_high(v) && !st.in_cover[v]) {
      st.in_cover[v] = 1;
      ++st.cover_size;
    }
  st.epoch_length = vc_epoch_length(eps, st.cover_size);
  st.epoch_remaining = st.epoch_length;
  return st;
}

std::vector<CoverChange> lazy_vc_update(LazyVcState& st, EdgeOp op, Vertex u, Vertex v) {
  DynamicGraph& dg = *st.dg;
  const bool present = dg.has_edge(u, v);
  if (op == EdgeOp::Insert && !present)
    throw input_error("lazy_vc_update expects the insert to be applied first");
  if (op == EdgeOp::Delete && present)
    throw input_error("lazy_vc_update expects the delete to be applied first");

  ++st.updates_seen;
  st.tracker.on_update(u, v);

  std::vector<CoverChange> changes;
  if (op == EdgeOp::Insert && !st.in_cover[u] && !st.in_cover[v]) {
    Vertex pick;
    if (dg.degree(u) != dg.degree(v))
      pick = dg.degree(u) > dg.degree(v) ? u : v;
    else
      pick = std::min(u, v);
    st.in_cover[pick] = 1;
    ++st.cover_size;
    changes.push_back({pick, true});
  }

  if (st.epoch_remaining > 0) --st.epoch_remaining;
  if (st.epoch_remaining == 0) {
    auto rebuild_changes = rebuild_vc(st);
    changes.insert(changes.end(), rebuild_changes.begin(), rebuild_changes.end());
  }

  st.changes_log += static_cast<long long>(changes.size());
  st.max_single_update_changes =
      std::max(st.max_single_update_changes, static_cast<long long>(changes.size()));
  return changes;
}

bool query_in_cover(const LazyVcState& st, Vertex v) {
  if (v < 0 || v >= static_cast<Vertex>(st.in_cover.size()))
    throw input_error("vertex id out of range");
  return st.in_cover[v] != 0;
}

UpdateStats update_stats(const LazyVcState& st) {
  UpdateStats stats;
  stats.updates = st.updates_seen;
  stats.rebuild_count = st.rebuild_count;
  stats.changes_log = st.changes_log;
  stats.max_single_update_changes = st.max_single_update_changes;
  if (st.updates_seen > 0)
    stats.amortized_changes_per_update =
        static_cast<double>(st.changes_log) / static_cast<double>(st.updates_seen);
  for (const auto& r : st.rebuilds) stats.max_scan_edges = std::max(stats.max_scan_edges, r.scan_edges);
  return stats;
}

IndependentSet LazyIsState::independent_set() const {
  IndependentSet s;
  for (Vertex v = 0; v < static_cast<Vertex>(in_set.size()); ++v)
    if (in_set[v]) s.vertices.push_back(v);
  return s;
}

namespace {

long long is_epoch_length(const LazyIsState& st) {
  const int n = st.dg->vertex_count();
  Rational beta = st.dg->average_degree();
  return (st.eps / 4 * Rational(n) / (beta + 1)).floor();
}

std::vector<CoverChange> rebuild_is(LazyIsState& st) {
  Graph snap = st.dg->snapshot();
  IndependentSet fresh = st.solver == IsStaticSolver::Exact
                             ? max_is_exact(snap, st.node_budget)
                             : greedy_is_min_degree(snap);
  std::vector<char> next(static_cast<size_t>(snap.vertex_count()), 0);
  for (Vertex v : fresh.vertices) next[v] = 1;

  std::vector<CoverChange> changes;
  for (Vertex v = 0; v < snap.vertex_count(); ++v)
    if (st.in_set[v] != next[v]) changes.push_back({v, next[v] != 0});
  st.in_set = std::move(next);
  st.set_size = fresh.size();
  st.epoch_length = is_epoch_length(st);
  st.epoch_remaining = st.epoch_length;
  ++st.rebuild_count;
  return changes;
}

}  // namespace

LazyIsState lazy_is_init(DynamicGraph& dg, IsStaticSolver solver, Rational eps,
                         long long node_budget) {
  if (!eps.is_positive()) throw input_error("eps must be positive");
  LazyIsState st;
  st.dg = &dg;
  st.solver = solver;
  st.t = 1;
  st.eps = eps;
  st.node_budget = node_budget;
  st.in_set.assign(static_cast<size_t>(dg.vertex_count()), 0);
  rebuild_is(st);
  st.rebuild_count = 0;  // the initial solve is not an epoch rebuild
  st.changes_log = 0;
  return st;
}

std::vector<CoverChange> lazy_is_update(LazyIsState& st, EdgeOp op, Vertex u, Vertex v) {
  DynamicGraph& dg = *st.dg;
  const bool present = dg.has_edge(u, v);
  if (op == EdgeOp::Insert && !present)
    throw input_error("lazy_is_update expects the insert to be applied first");
  if (op == EdgeOp::Delete && present)
    throw input_error("lazy_is_update expects the delete to be applied first");

  ++st.updates_seen;
  std::vector<CoverChange> changes;
  if (op == EdgeOp::Insert && st.in_set[u] && st.in_set[v]) {
    Vertex evict;
    if (dg.degree(u) != dg.degree(v))
      evict = dg.degree(u) > dg.degree(v) ? u : v;
    else
      evict = std::min(u, v);
    st.in_set[evict] = 0;
    --st.set_size;
    changes.push_back({evict, false});
  }

  if (st.epoch_remaining > 0) --st.epoch_remaining;
  if (st.epoch_remaining == 0) {
    auto rebuild_changes = rebuild_is(st);
    changes.insert(changes.end(), rebuild_changes.begin(), rebuild_changes.end());
  }
  st.changes_log += static_cast<long long>(changes.size());
  return changes;
}

std::vector<TraceStep> load_trace(std::istream& in) {
  std::vector<TraceStep> steps;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    bool blank = true;
    for (char c : line)
      if (!isspace(static_cast<unsigned char>(c))) {
        blank = false;
        break;
      }
    if (blank || line[line.find_first_not_of(" \t")] == '#') continue;
    std::istringstream fields(line);
    char op;
    long long u, v;
    if (!(fields >> op >> u >> v) || (op != '+' && op != '-'))
      throw parse_error("expected '+ u v' or '- u v'", line_no);
    steps.push_back({op == '+' ? EdgeOp::Insert : EdgeOp::Delete, static_cast<Vertex>(u),
                     static_cast<Vertex>(v)});
  }
  return steps;
}

std::vector<TraceStep> load_trace(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open " + path, 0);
  return load_trace(in);
}

void save_trace(std::span<const TraceStep> steps, std::ostream& out) {
  for (const TraceStep& s : steps)
    out << (s.op == EdgeOp::Insert ? '+' : '-') << ' ' << s.u << ' ' << s.v << '\n';
}

std::vector<TraceStep> generate_update_trace(const Graph& universe, int steps,
                                             std::uint64_t seed) {
  auto pool = universe.edges();
  if (pool.empty()) throw input_error("trace universe has no edges");
  std::vector<char> present(pool.size(), 1);
  std::mt19937_64 rng(seed);
  std::vector<TraceStep> trace;
  trace.reserve(static_cast<size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    size_t pick = static_cast<size_t>(bounded_uniform(rng, pool.size()));
    TraceStep step{present[pick] ? EdgeOp::Delete : EdgeOp::Insert, pool[pick].u, pool[pick].v};
    present[pick] = present[pick] ? 0 : 1;
    trace.push_back(step);
  }
  return trace;
}

}  // namespace bds
