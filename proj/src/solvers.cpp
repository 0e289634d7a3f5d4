#include "bds/solvers.hpp"

#include <algorithm>
#include <functional>
#include <ostream>

namespace bds {

namespace {

// Mutable alive/degree view over an immutable Graph with LIFO remove/restore,
// shared by the branch-and-bound solvers.
class Workspace {
 public:
  explicit Workspace(const Graph& g)
      : g_(&g),
        alive_(static_cast<size_t>(g.vertex_count()), 1),
        deg_(static_cast<size_t>(g.vertex_count())) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) deg_[v] = g.degree(v);
    alive_count_ = g.vertex_count();
    alive_edges_ = g.edge_count();
  }

  const Graph& graph() const { return *g_; }
  bool alive(Vertex v) const { return alive_[v] != 0; }
  int deg(Vertex v) const { return deg_[v]; }
  int alive_count() const { return alive_count_; }
  long long alive_edges() const { return alive_edges_; }

  size_t mark() const { return log_.size(); }

  void remove(Vertex v) {
    alive_[v] = 0;
    --alive_count_;
    alive_edges_ -= deg_[v];  // deg_[v] freezes at its removal-time value
    for (Vertex w : g_->neighbors(v))
      if (alive_[w]) --deg_[w];
    log_.push_back(v);
  }

  void restore_to(size_t mark) {
    while (log_.size() > mark) {
      Vertex v = log_.back();
      log_.pop_back();
      alive_[v] = 1;
      ++alive_count_;
      alive_edges_ += deg_[v];
      for (Vertex w : g_->neighbors(v))
        if (alive_[w]) ++deg_[w];
    }
  }

  Vertex first_alive_neighbor(Vertex v) const {
    for (Vertex w : g_->neighbors(v))
      if (alive_[w]) return w;
    return -1;
  }

  std::vector<Vertex> alive_neighbors(Vertex v) const {
    std::vector<Vertex> out;
    for (Vertex w : g_->neighbors(v))
      if (alive_[w]) out.push_back(w);
    return out;
  }

 private:
  const Graph* g_;
  std::vector<char> alive_;
  std::vector<int> deg_;
  std::vector<Vertex> log_;
  int alive_count_ = 0;
  long long alive_edges_ = 0;
};

struct BnbContext {
  long long budget;
  long long nodes = 0;

  void tick() {
    if (++nodes > budget)
      throw capability_error("exact solver exceeded its branch budget of " +
                             std::to_string(budget) + " nodes");
  }
};

std::vector<std::vector<Vertex>> alive_components(const Workspace& ws) {
  const Graph& g = ws.graph();
  std::vector<char> seen(static_cast<size_t>(g.vertex_count()), 0);
  std::vector<std::vector<Vertex>> comps;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (!ws.alive(s) || seen[s]) continue;
    comps.emplace_back();
    auto& comp = comps.back();
    seen[s] = 1;
    stack.assign(1, s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex w : g.neighbors(v))
        if (ws.alive(w) && !seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
  }
  return comps;
}

// Walks a component in which every alive vertex has degree <= 2. Returns the
// vertex sequence and whether it closes into a cycle. Paths start at the
// lowest-id endpoint; cycles start at the lowest-id vertex and step to its
// lower-id neighbor.
std::pair<std::vector<Vertex>, bool> walk_degree_two_component(const Workspace& ws,
                                                               const std::vector<Vertex>& comp) {
  Vertex start = comp.front();
  bool cycle = true;
  for (Vertex v : comp)
    if (ws.deg(v) <= 1) {
      start = v;
      cycle = false;
      break;
    }
  std::vector<Vertex> seq{start};
  Vertex prev = -1, cur = start;
  while (true) {
    Vertex next = -1;
    for (Vertex w : ws.graph().neighbors(cur)) {
      if (!ws.alive(w) || w == prev) continue;
      if (cycle && w == start && seq.size() > 2) continue;
      next = w;
      break;
    }
    if (next == -1 || next == start) break;
    seq.push_back(next);
    prev = cur;
    cur = next;
    if (seq.size() == comp.size()) break;
  }
  return {seq, cycle};
}

enum class Objective { MinVertexCover, MaxIndependentSet, MaxMatching };

// Exact answers for paths and cycles.
void closed_form_vertices(const Workspace& ws, const std::vector<Vertex>& comp,
                          Objective objective, std::vector<Vertex>& picks) {
  auto [seq, cycle] = walk_degree_two_component(ws, comp);
  const int k = static_cast<int>(seq.size());
  if (objective == Objective::MinVertexCover) {
    for (int i = 1; i < k; i += 2) picks.push_back(seq[i]);
    if (cycle && k % 2 == 1) picks.push_back(seq[k - 1]);
  } else {
    const int take = cycle ? k / 2 : (k + 1) / 2;
    for (int i = 0; i < take; ++i) picks.push_back(seq[2 * i]);
  }
}

void closed_form_matching(const Workspace& ws, const std::vector<Vertex>& comp,
                          std::vector<Edge>& picks) {
  auto [seq, cycle] = walk_degree_two_component(ws, comp);
  (void)cycle;
  for (size_t i = 0; i + 1 < seq.size(); i += 2) picks.emplace_back(seq[i], seq[i + 1]);
}

bool all_degree_at_most_two(const Workspace& ws, const std::vector<Vertex>& comp) {
  for (Vertex v : comp)
    if (ws.deg(v) > 2) return false;
  return true;
}

Vertex max_degree_vertex(const Workspace& ws, const std::vector<Vertex>& comp) {
  Vertex best = -1;
  int best_deg = -1;
  for (Vertex v : comp)
    if (ws.alive(v) && ws.deg(v) > best_deg) {
      best = v;
      best_deg = ws.deg(v);
    }
  return best;
}

int greedy_matching_size_alive(const Workspace& ws) {
  const Graph& g = ws.graph();
  std::vector<char> matched(static_cast<size_t>(g.vertex_count()), 0);
  int size = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!ws.alive(v) || matched[v]) continue;
    for (Vertex w : g.neighbors(v)) {
      if (ws.alive(w) && !matched[w] && w != v) {
        matched[v] = matched[w] = 1;
        ++size;
        break;
      }
    }
  }
  return size;
}

// ---------------------------------------------------------------------------
// Minimum vertex cover

std::vector<Vertex> vc_solve_graph(const Graph& g, BnbContext& ctx);

// Forced moves: drop isolated vertices; for a degree-1 vertex take its
// neighbor into the cover.
void reduce_vc(Workspace& ws, std::vector<Vertex>& picks) {
  std::vector<Vertex> work;
  for (Vertex v = 0; v < ws.graph().vertex_count(); ++v)
    if (ws.alive(v) && ws.deg(v) <= 1) work.push_back(v);
  for (size_t head = 0; head < work.size(); ++head) {
    Vertex v = work[head];
    if (!ws.alive(v)) continue;
    if (ws.deg(v) == 0) {
      ws.remove(v);
      continue;
    }
    if (ws.deg(v) != 1) continue;
    Vertex u = ws.first_alive_neighbor(v);
    picks.push_back(u);
    auto touched = ws.alive_neighbors(u);
    ws.remove(u);
    for (Vertex w : touched)
      if (ws.alive(w) && ws.deg(w) <= 1) work.push_back(w);
  }
}

class VcBranchSolver {
 public:
  VcBranchSolver(const Graph& g, BnbContext& ctx) : g_(g), ws_(g), ctx_(ctx) {
    best_ = vc_from_matching(greedy_maximal_matching(g)).vertices;
  }

  std::vector<Vertex> solve() {
    dfs();
    std::sort(best_.begin(), best_.end());
    return best_;
  }

 private:
  void consider(std::vector<Vertex> candidate) {
    if (candidate.size() < best_.size()) best_ = std::move(candidate);
  }

  void dfs() {
    ctx_.tick();
    const size_t mark = ws_.mark();
    const size_t cur_mark = cur_.size();
    reduce_vc(ws_, cur_);
    if (ws_.alive_edges() == 0) {
      consider(cur_);
    } else {
      auto comps = alive_components(ws_);
      if (comps.size() > 1) {
        std::vector<Vertex> total = cur_;
        for (const auto& comp : comps) {
          auto sub = induced_subgraph(g_, comp);
          for (Vertex local : vc_solve_graph(sub.graph, ctx_))
            total.push_back(sub.to_original(local));
        }
        consider(std::move(total));
      } else if (all_degree_at_most_two(ws_, comps[0])) {
        std::vector<Vertex> total = cur_;
        closed_form_vertices(ws_, comps[0], Objective::MinVertexCover, total);
        consider(std::move(total));
      } else if (cur_.size() + static_cast<size_t>(greedy_matching_size_alive(ws_)) <
                 best_.size()) {
        Vertex v = max_degree_vertex(ws_, comps[0]);
        // Branch 1: v joins the cover.
        {
          const size_t m2 = ws_.mark();
          cur_.push_back(v);
          ws_.remove(v);
          dfs();
          ws_.restore_to(m2);
          cur_.pop_back();
        }
        // Branch 2: v stays out, so all its neighbors join.
        {
          const size_t m2 = ws_.mark();
          const size_t c2 = cur_.size();
          auto nbrs = ws_.alive_neighbors(v);
          ws_.remove(v);
          for (Vertex w : nbrs) {
            cur_.push_back(w);
            ws_.remove(w);
          }
          dfs();
          ws_.restore_to(m2);
          cur_.resize(c2);
        }
      }
    }
    ws_.restore_to(mark);
    cur_.resize(cur_mark);
  }

  const Graph& g_;
  Workspace ws_;
  BnbContext& ctx_;
  std::vector<Vertex> cur_;
  std::vector<Vertex> best_;
};

std::vector<Vertex> vc_solve_graph(const Graph& g, BnbContext& ctx) {
  Workspace ws(g);
  std::vector<Vertex> picks;
  reduce_vc(ws, picks);
  if (ws.alive_edges() > 0) {
    for (const auto& comp : alive_components(ws)) {
      if (all_degree_at_most_two(ws, comp)) {
        closed_form_vertices(ws, comp, Objective::MinVertexCover, picks);
      } else {
        auto sub = induced_subgraph(g, comp);
        VcBranchSolver solver(sub.graph, ctx);
        for (Vertex local : solver.solve()) picks.push_back(sub.to_original(local));
      }
    }
  }
  std::sort(picks.begin(), picks.end());
  return picks;
}

// ---------------------------------------------------------------------------
// Maximum independent set

std::vector<Vertex> is_solve_graph(const Graph& g, BnbContext& ctx);

// Forced moves: take isolated vertices; a degree-1 vertex can always be taken
// in place of its neighbor.
void reduce_is(Workspace& ws, std::vector<Vertex>& picks) {
  std::vector<Vertex> work;
  for (Vertex v = 0; v < ws.graph().vertex_count(); ++v)
    if (ws.alive(v) && ws.deg(v) <= 1) work.push_back(v);
  for (size_t head = 0; head < work.size(); ++head) {
    Vertex v = work[head];
    if (!ws.alive(v)) continue;
    if (ws.deg(v) == 0) {
      picks.push_back(v);
      ws.remove(v);
      continue;
    }
    if (ws.deg(v) != 1) continue;
    Vertex u = ws.first_alive_neighbor(v);
    picks.push_back(v);
    ws.remove(v);
    auto touched = ws.alive_neighbors(u);
    ws.remove(u);
    for (Vertex w : touched)
      if (ws.alive(w) && ws.deg(w) <= 1) work.push_back(w);
  }
}

class IsBranchSolver {
 public:
  IsBranchSolver(const Graph& g, BnbContext& ctx) : g_(g), ws_(g), ctx_(ctx) {
    best_ = greedy_is_min_degree(g).vertices;
  }

  std::vector<Vertex> solve() {
    dfs();
    std::sort(best_.begin(), best_.end());
    return best_;
  }

 private:
  void consider(std::vector<Vertex> candidate) {
    if (candidate.size() > best_.size()) best_ = std::move(candidate);
  }

  void dfs() {
    ctx_.tick();
    const size_t mark = ws_.mark();
    const size_t cur_mark = cur_.size();
    reduce_is(ws_, cur_);
    if (ws_.alive_count() == 0) {
      consider(cur_);
    } else {
      auto comps = alive_components(ws_);
      if (comps.size() > 1) {
        std::vector<Vertex> total = cur_;
        for (const auto& comp : comps) {
          auto sub = induced_subgraph(g_, comp);
          for (Vertex local : is_solve_graph(sub.graph, ctx_))
            total.push_back(sub.to_original(local));
        }
        consider(std::move(total));
      } else if (all_degree_at_most_two(ws_, comps[0])) {
        std::vector<Vertex> total = cur_;
        closed_form_vertices(ws_, comps[0], Objective::MaxIndependentSet, total);
        consider(std::move(total));
      } else if (cur_.size() + static_cast<size_t>(ws_.alive_count()) > best_.size()) {
        Vertex v = max_degree_vertex(ws_, comps[0]);
        // Branch 1: take v, drop its closed neighborhood.
        {
          const size_t m2 = ws_.mark();
          cur_.push_back(v);
          for (Vertex w : ws_.alive_neighbors(v)) ws_.remove(w);
          ws_.remove(v);
          dfs();
          ws_.restore_to(m2);
          cur_.pop_back();
        }
        // Branch 2: leave v out.
        {
          const size_t m2 = ws_.mark();
          ws_.remove(v);
          dfs();
          ws_.restore_to(m2);
        }
      }
    }
    ws_.restore_to(mark);
    cur_.resize(cur_mark);
  }

  const Graph& g_;
  Workspace ws_;
  BnbContext& ctx_;
  std::vector<Vertex> cur_;
  std::vector<Vertex> best_;
};

std::vector<Vertex> is_solve_graph(const Graph& g, BnbContext& ctx) {
  Workspace ws(g);
  std::vector<Vertex> picks;
  reduce_is(ws, picks);
  if (ws.alive_count() > 0) {
    for (const auto& comp : alive_components(ws)) {
      if (all_degree_at_most_two(ws, comp)) {
        closed_form_vertices(ws, comp, Objective::MaxIndependentSet, picks);
      } else {
        auto sub = induced_subgraph(g, comp);
        IsBranchSolver solver(sub.graph, ctx);
        for (Vertex local : solver.solve()) picks.push_back(sub.to_original(local));
      }
    }
  }
  std::sort(picks.begin(), picks.end());
  return picks;
}

// ---------------------------------------------------------------------------
// Maximum matching

std::vector<Edge> matching_solve_graph(const Graph& g, BnbContext& ctx);

// Forced moves: drop isolated vertices; a pendant edge is always in some
// maximum matching.
void reduce_matching(Workspace& ws, std::vector<Edge>& picks) {
  std::vector<Vertex> work;
  for (Vertex v = 0; v < ws.graph().vertex_count(); ++v)
    if (ws.alive(v) && ws.deg(v) <= 1) work.push_back(v);
  for (size_t head = 0; head < work.size(); ++head) {
    Vertex v = work[head];
    if (!ws.alive(v)) continue;
    if (ws.deg(v) == 0) {
      ws.remove(v);
      continue;
    }
    if (ws.deg(v) != 1) continue;
    Vertex u = ws.first_alive_neighbor(v);
    picks.emplace_back(v, u);
    ws.remove(v);
    auto touched = ws.alive_neighbors(u);
    ws.remove(u);
    for (Vertex w : touched)
      if (ws.alive(w) && ws.deg(w) <= 1) work.push_back(w);
  }
}

class MatchingBranchSolver {
 public:
  MatchingBranchSolver(const Graph& g, BnbContext& ctx) : g_(g), ws_(g), ctx_(ctx) {
    best_ = greedy_maximal_matching(g).edges;
  }

  std::vector<Edge> solve() {
    dfs();
    std::sort(best_.begin(), best_.end());
    return best_;
  }

 private:
  void consider(std::vector<Edge> candidate) {
    if (candidate.size() > best_.size()) best_ = std::move(candidate);
  }

  void dfs() {
    ctx_.tick();
    const size_t mark = ws_.mark();
    const size_t cur_mark = cur_.size();
    reduce_matching(ws_, cur_);
    if (ws_.alive_edges() == 0) {
      consider(cur_);
    } else {
      auto comps = alive_components(ws_);
      if (comps.size() > 1) {
        std::vector<Edge> total = cur_;
        for (const auto& comp : comps) {
          auto sub = induced_subgraph(g_, comp);
          for (const Edge& e : matching_solve_graph(sub.graph, ctx_))
            total.emplace_back(sub.to_original(e.u), sub.to_original(e.v));
        }
        consider(std::move(total));
      } else if (all_degree_at_most_two(ws_, comps[0])) {
        std::vector<Edge> total = cur_;
        closed_form_matching(ws_, comps[0], total);
        consider(std::move(total));
      } else if (cur_.size() + static_cast<size_t>(ws_.alive_count()) / 2 > best_.size()) {
        Vertex v = comps[0].front();  // lowest alive id, degree >= 2 after reduction
        auto nbrs = ws_.alive_neighbors(v);
        for (Vertex u : nbrs) {
          const size_t m2 = ws_.mark();
          cur_.emplace_back(v, u);
          ws_.remove(v);
          ws_.remove(u);
          dfs();
          ws_.restore_to(m2);
          cur_.pop_back();
        }
        // Final branch: v stays unmatched.
        {
          const size_t m2 = ws_.mark();
          ws_.remove(v);
          dfs();
          ws_.restore_to(m2);
        }
      }
    }
    ws_.restore_to(mark);
    cur_.resize(cur_mark);
  }

  const Graph& g_;
  Workspace ws_;
  BnbContext& ctx_;
  std::vector<Edge> cur_;
  std::vector<Edge> best_;
};

std::vector<Edge> matching_solve_graph(const Graph& g, BnbContext& ctx) {
  Workspace ws(g);
  std::vector<Edge> picks;
  reduce_matching(ws, picks);
  if (ws.alive_edges() > 0) {
    for (const auto& comp : alive_components(ws)) {
      if (all_degree_at_most_two(ws, comp)) {
        closed_form_matching(ws, comp, picks);
      } else {
        auto sub = induced_subgraph(g, comp);
        MatchingBranchSolver solver(sub.graph, ctx);
        for (const Edge& e : solver.solve())
          picks.emplace_back(sub.to_original(e.u), sub.to_original(e.v));
      }
    }
  }
  std::sort(picks.begin(), picks.end());
  return picks;
}

}  // namespace

// ---------------------------------------------------------------------------

std::vector<Vertex> Matching::partner_map(int n) const {
  std::vector<Vertex> partner(static_cast<size_t>(n), -1);
  for (const Edge& e : edges) {
    partner[e.u] = e.v;
    partner[e.v] = e.u;
  }
  return partner;
}

Matching greedy_maximal_matching(const Graph& g) {
  auto order = g.edges();
  return greedy_maximal_matching(g, order);
}

Matching greedy_maximal_matching(const Graph& g, std::span<const Edge> order) {
  std::vector<char> used(static_cast<size_t>(g.vertex_count()), 0);
  Matching m;
  for (const Edge& e : order) {
    if (!g.has_edge(e.u, e.v))
      throw input_error("edge ordering contains a non-edge (" + std::to_string(e.u) + ", " +
                        std::to_string(e.v) + ")");
    if (!used[e.u] && !used[e.v]) {
      used[e.u] = used[e.v] = 1;
      m.edges.emplace_back(e.u, e.v);
    }
  }
  std::sort(m.edges.begin(), m.edges.end());
  return m;
}

Matching max_matching_exact(const Graph& g, long long node_budget) {
  BnbContext ctx{node_budget};
  Matching m;
  m.edges = matching_solve_graph(g, ctx);
  return m;
}

Matching approx_matching_short_augment(const Graph& g, const Rational& eps) {
  if (!eps.is_positive()) throw input_error("eps must be positive");
  const long long max_len = 2 * (Rational(1) / eps).ceil() - 1;
  const int n = g.vertex_count();

  auto partner = greedy_maximal_matching(g).partner_map(n);
  std::vector<char> on_path(static_cast<size_t>(n), 0);
  std::vector<Vertex> path;

  // Exhaustive DFS over simple alternating paths of at most max_len edges.
  std::function<bool(Vertex, long long)> extend = [&](Vertex x, long long used) -> bool {
    for (Vertex w : g.neighbors(x)) {
      if (on_path[w]) continue;
      if (partner[w] == -1) {
        path.push_back(w);
        return true;  // augmenting path found, (x, w) is its last edge
      }
      if (used + 3 > max_len) continue;
      Vertex y = partner[w];
      if (on_path[y]) continue;
      path.push_back(w);
      path.push_back(y);
      on_path[w] = on_path[y] = 1;
      if (extend(y, used + 2)) return true;
      on_path[w] = on_path[y] = 0;
      path.pop_back();
      path.pop_back();
    }
    return false;
  };

  bool augmented = true;
  while (augmented) {
    augmented = false;
    for (Vertex v = 0; v < n; ++v) {
      if (partner[v] != -1) continue;
      path.assign(1, v);
      on_path[v] = 1;
      bool found = extend(v, 0);
      if (found) {
        for (size_t i = 0; i + 1 < path.size(); i += 2) {
          partner[path[i]] = path[i + 1];
          partner[path[i + 1]] = path[i];
        }
        augmented = true;
      }
      for (Vertex p : path) on_path[p] = 0;
    }
  }

  Matching m;
  for (Vertex v = 0; v < n; ++v)
    if (partner[v] > v) m.edges.emplace_back(v, partner[v]);
  return m;
}

std::optional<Rational> eta_maximality(const Graph& g, const Matching& m,
                                       long long node_budget) {
  if (!verify_matching(g, m)) throw input_error("eta_maximality needs a valid matching");
  std::vector<char> covered(static_cast<size_t>(g.vertex_count()), 0);
  for (const Edge& e : m.edges) covered[e.u] = covered[e.v] = 1;
  std::vector<Vertex> free;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (!covered[v]) free.push_back(v);
  auto sub = induced_subgraph(g, free);
  int addable = max_matching_exact(sub.graph, node_budget).size();
  if (m.size() == 0) {
    if (addable == 0) return Rational(0);
    return std::nullopt;  // infinitely far from maximal
  }
  return Rational(addable, m.size());
}

VertexCover min_vc_exact(const Graph& g, long long node_budget) {
  BnbContext ctx{node_budget};
  return VertexCover{vc_solve_graph(g, ctx)};
}

VertexCover vc_from_matching(const Matching& m) {
  VertexCover cover;
  cover.vertices.reserve(m.edges.size() * 2);
  for (const Edge& e : m.edges) {
    cover.vertices.push_back(e.u);
    cover.vertices.push_back(e.v);
  }
  std::sort(cover.vertices.begin(), cover.vertices.end());
  return cover;
}

VertexCover assemble_vc(const Graph& g, const HighLowSplit& split, const VertexCover& vc_low) {
  if (static_cast<int>(split.high_flag.size()) != g.vertex_count())
    throw input_error("split does not belong to this graph");
  std::vector<char> in_cover(static_cast<size_t>(g.vertex_count()), 0);
  for (Vertex v : vc_low.vertices) {
    if (v < 0 || v >= g.vertex_count()) throw input_error("cover vertex out of range");
    in_cover[v] = 1;
  }
  for (const Edge& e : g.edges()) {
    if (split.is_high(e.u) || split.is_high(e.v)) continue;
    if (!in_cover[e.u] && !in_cover[e.v])
      throw input_error("vc_low does not cover G[low]: edge (" + std::to_string(e.u) + ", " +
                        std::to_string(e.v) + ") uncovered");
  }
  VertexCover result;
  result.vertices = vc_low.vertices;
  result.vertices.insert(result.vertices.end(), split.high.begin(), split.high.end());
  std::sort(result.vertices.begin(), result.vertices.end());
  result.vertices.erase(std::unique(result.vertices.begin(), result.vertices.end()),
                        result.vertices.end());
  return result;
}

IndependentSet max_is_exact(const Graph& g, long long node_budget) {
  BnbContext ctx{node_budget};
  return IndependentSet{is_solve_graph(g, ctx)};
}

IndependentSet greedy_is_min_degree(const Graph& g) {
  Workspace ws(g);
  IndependentSet result;
  while (ws.alive_count() > 0) {
    Vertex pick = -1;
    int pick_deg = g.vertex_count() + 1;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      if (ws.alive(v) && ws.deg(v) < pick_deg) {
        pick = v;
        pick_deg = ws.deg(v);
      }
    result.vertices.push_back(pick);
    for (Vertex w : ws.alive_neighbors(pick)) ws.remove(w);
    ws.remove(pick);
  }
  std::sort(result.vertices.begin(), result.vertices.end());
  return result;
}

bool verify_matching(const Graph& g, const Matching& m) {
  std::vector<char> used(static_cast<size_t>(g.vertex_count()), 0);
  for (const Edge& e : m.edges) {
    if (e.u < 0 || e.v >= g.vertex_count()) return false;
    if (!g.has_edge(e.u, e.v)) return false;
    if (used[e.u] || used[e.v]) return false;
    used[e.u] = used[e.v] = 1;
  }
  return true;
}

bool verify_vc(const Graph& g, const VertexCover& cover) {
  std::vector<char> in(static_cast<size_t>(g.vertex_count()), 0);
  for (Vertex v : cover.vertices) {
    if (v < 0 || v >= g.vertex_count()) return false;
    in[v] = 1;
  }
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    if (in[u]) continue;
    for (Vertex w : g.neighbors(u))
      if (!in[w]) return false;
  }
  return true;
}

bool verify_is(const Graph& g, const IndependentSet& iset) {
  std::vector<char> in(static_cast<size_t>(g.vertex_count()), 0);
  for (Vertex v : iset.vertices) {
    if (v < 0 || v >= g.vertex_count()) return false;
    in[v] = 1;
  }
  for (Vertex v : iset.vertices)
    for (Vertex w : g.neighbors(v))
      if (in[w]) return false;
  return true;
}

void save_matching(const Matching& m, std::ostream& out) {
  out << "# type=matching\n";
  for (const Edge& e : m.edges) out << e.u << ' ' << e.v << '\n';
}

void save_vertex_cover(const VertexCover& cover, std::ostream& out) {
  out << "# type=vc\n";
  for (Vertex v : cover.vertices) out << v << '\n';
}

void save_independent_set(const IndependentSet& iset, std::ostream& out) {
  out << "# type=is\n";
  for (Vertex v : iset.vertices) out << v << '\n';
}

}  // namespace bds
