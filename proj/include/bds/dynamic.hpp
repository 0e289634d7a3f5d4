#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "bds/graph.hpp"
#include "bds/rational.hpp"
#include "bds/solvers.hpp"

namespace bds {

enum class EdgeOp { Insert, Delete };

struct TraceStep {
  EdgeOp op;
  Vertex u = 0;
  Vertex v = 0;
};

// Mutable simple graph under edge insertions and deletions. Adjacency lists
// stay sorted so snapshots inherit the canonical slot order.
class DynamicGraph {
 public:
  DynamicGraph() = default;
  explicit DynamicGraph(const Graph& initial);
  explicit DynamicGraph(int n) : adj_(static_cast<size_t>(n)) {}

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  long long edge_count() const { return m_; }
  long long update_count() const { return updates_; }
  int degree(Vertex v) const;
  bool has_edge(Vertex u, Vertex v) const;
  std::span<const Vertex> neighbors(Vertex v) const;
  Rational average_degree() const {
    return vertex_count() == 0 ? Rational(0) : Rational(2 * m_, vertex_count());
  }

  // insert requires u != v and the edge absent; delete requires it present.
  void insert_edge(Vertex u, Vertex v);
  void delete_edge(Vertex u, Vertex v);

  // Immutable copy of the current state.
  Graph snapshot() const;

 private:
  void check_vertex(Vertex v) const;

  std::vector<std::vector<Vertex>> adj_;
  long long m_ = 0;
  long long updates_ = 0;
};

// Caches the degree >= delta flag per vertex; an update flips at most the two
// endpoint flags.
class HighLowTracker {
 public:
  HighLowTracker() = default;
  HighLowTracker(const DynamicGraph& dg, int delta);

  // Call after the graph has applied an update touching u and v.
  void on_update(Vertex u, Vertex v);

  bool is_high(Vertex v) const { return high_[static_cast<size_t>(v)] != 0; }
  int delta() const { return delta_; }
  std::vector<Vertex> high_vertices() const;

 private:
  const DynamicGraph* dg_ = nullptr;
  int delta_ = 0;
  std::vector<char> high_;
};

struct CoverChange {
  Vertex v = 0;
  bool added = false;
};

struct RebuildRecord {
  long long update_index = 0;
  long long scan_edges = 0;        // adjacency entries examined to discover G_low
  int cover_size_before = 0;
  int cover_size_after = 0;
  long long epoch_length_set = 0;
};

enum class VcStaticSolver { Exact, TwoApproxMatching };

// Lazy vertex cover maintenance: patch validity per update, recompute the
// sparsified cover once per epoch of floor(eps/4 * |cover|) updates.
struct LazyVcState {
  DynamicGraph* dg = nullptr;
  HighLowTracker tracker;
  VcStaticSolver solver = VcStaticSolver::Exact;
  int t = 1;
  Rational eps;
  int alpha = 1;
  int delta = 1;
  long long node_budget = kDefaultNodeBudget;

  std::vector<char> in_cover;
  int cover_size = 0;
  long long epoch_remaining = 0;
  long long epoch_length = 0;

  long long updates_seen = 0;
  long long rebuild_count = 0;
  long long changes_log = 0;
  long long max_single_update_changes = 0;
  std::vector<RebuildRecord> rebuilds;

  VertexCover cover() const;
};

LazyVcState lazy_vc_init(DynamicGraph& dg, VcStaticSolver solver, Rational eps, int alpha,
                         long long node_budget = kDefaultNodeBudget);

// Apply the bookkeeping for an update already applied to the graph. Returns
// the cover changes made by this step (patch and/or epoch rebuild).
std::vector<CoverChange> lazy_vc_update(LazyVcState& state, EdgeOp op, Vertex u, Vertex v);

bool query_in_cover(const LazyVcState& state, Vertex v);

struct UpdateStats {
  long long updates = 0;
  long long rebuild_count = 0;
  long long changes_log = 0;
  double amortized_changes_per_update = 0.0;
  long long max_single_update_changes = 0;
  long long max_scan_edges = 0;
};

UpdateStats update_stats(const LazyVcState& state);

enum class IsStaticSolver { Exact, GreedyMinDegree };

// Lazy independent set maintenance; epochs of floor(eps/4 * n/(beta+1))
// updates, beta being the average degree at rebuild time.
struct LazyIsState {
  DynamicGraph* dg = nullptr;
  IsStaticSolver solver = IsStaticSolver::Exact;
  int t = 1;
  Rational eps;
  long long node_budget = kDefaultNodeBudget;

  std::vector<char> in_set;
  int set_size = 0;
  long long epoch_remaining = 0;
  long long epoch_length = 0;

  long long updates_seen = 0;
  long long rebuild_count = 0;
  long long changes_log = 0;

  IndependentSet independent_set() const;
};

LazyIsState lazy_is_init(DynamicGraph& dg, IsStaticSolver solver, Rational eps,
                         long long node_budget = kDefaultNodeBudget);

std::vector<CoverChange> lazy_is_update(LazyIsState& state, EdgeOp op, Vertex u, Vertex v);

// Update-trace text format: one `+ u v` or `- u v` per line.
std::vector<TraceStep> load_trace(std::istream& in);
std::vector<TraceStep> load_trace(const std::string& path);
void save_trace(std::span<const TraceStep> steps, std::ostream& out);

// Random toggle walk over the edges of `universe`: each step flips the
// presence of a uniformly chosen universe edge. Replayed against an initial
// graph equal to `universe`, so the live graph is always a subgraph of it.
std::vector<TraceStep> generate_update_trace(const Graph& universe, int steps,
                                             std::uint64_t seed);

}  // namespace bds
