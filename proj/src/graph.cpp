#include "bds/graph.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include "bds/rng.hpp"

namespace bds {

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
  if (n < 0) throw input_error("negative vertex count");
  Graph g(n);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v >= n)
      throw input_error("edge endpoint out of range: (" + std::to_string(e.u) + ", " +
                        std::to_string(e.v) + ")");
    if (e.u == e.v) throw input_error("self-loop at vertex " + std::to_string(e.u));
    g.adj_[e.u].push_back(e.v);
    g.adj_[e.v].push_back(e.u);
  }
  for (Vertex v = 0; v < n; ++v) {
    auto& list = g.adj_[v];
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end())
      throw input_error("duplicate edge at vertex " + std::to_string(v));
  }
  g.m_ = static_cast<long long>(edges.size());
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  const auto& list = adj_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

int Graph::slot_of(Vertex u, Vertex v) const {
  check_vertex(u);
  const auto& list = adj_[u];
  auto it = std::lower_bound(list.begin(), list.end(), v);
  if (it == list.end() || *it != v) return -1;
  return static_cast<int>(it - list.begin());
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<size_t>(m_));
  for (Vertex u = 0; u < vertex_count(); ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

HighLowSplit split_high_low(const Graph& g, int delta) {
  if (delta < 1) throw input_error("delta must be >= 1");
  HighLowSplit split;
  split.delta = delta;
  split.high_flag.assign(static_cast<size_t>(g.vertex_count()), 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) >= delta) {
      split.high_flag[static_cast<size_t>(v)] = 1;
      split.high.push_back(v);
    } else {
      split.low.push_back(v);
    }
  }
  return split;
}

Vertex InducedSubgraph::to_local(Vertex original) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), original);
  if (it == vertices.end() || *it != original) return -1;
  return static_cast<Vertex>(it - vertices.begin());
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  InducedSubgraph sub;
  sub.vertices.assign(vertices.begin(), vertices.end());
  std::sort(sub.vertices.begin(), sub.vertices.end());
  sub.vertices.erase(std::unique(sub.vertices.begin(), sub.vertices.end()), sub.vertices.end());
  std::vector<Edge> edges;
  for (size_t local = 0; local < sub.vertices.size(); ++local) {
    Vertex orig = sub.vertices[local];
    for (Vertex w : g.neighbors(orig)) {
      if (w <= orig) continue;
      Vertex wl = sub.to_local(w);
      if (wl >= 0) edges.emplace_back(static_cast<Vertex>(local), wl);
    }
  }
  sub.graph = Graph::from_edges(static_cast<int>(sub.vertices.size()), edges);
  return sub;
}

int degeneracy(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return 0;
  std::vector<int> deg(n);
  int max_deg = 0;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    max_deg = std::max(max_deg, deg[v]);
  }
  // Bucketed min-degree peeling.
  std::vector<std::vector<Vertex>> buckets(static_cast<size_t>(max_deg) + 1);
  for (Vertex v = 0; v < n; ++v) buckets[deg[v]].push_back(v);
  std::vector<char> removed(static_cast<size_t>(n), 0);
  int result = 0;
  int cursor = 0;
  for (int peeled = 0; peeled < n; ++peeled) {
    while (cursor <= max_deg && buckets[cursor].empty()) ++cursor;
    // Entries are inserted lazily, so skip any whose degree moved on.
    Vertex v = -1;
    for (int d = std::min(cursor, max_deg); d <= max_deg; ++d) {
      auto& b = buckets[d];
      while (!b.empty() && (removed[b.back()] || deg[b.back()] != d)) b.pop_back();
      if (!b.empty()) {
        v = b.back();
        b.pop_back();
        cursor = d;
        break;
      }
    }
    if (v < 0) break;
    removed[v] = 1;
    result = std::max(result, deg[v]);
    for (Vertex w : g.neighbors(v)) {
      if (!removed[w]) {
        --deg[w];
        buckets[deg[w]].push_back(w);
      }
    }
    cursor = std::max(0, cursor - 1);
  }
  return result;
}

int exact_arboricity(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 16)
    throw capability_error("exact arboricity is exhaustive and limited to n <= 16, got n = " +
                           std::to_string(n));
  if (n < 2 || g.edge_count() == 0) return 0;

  std::vector<std::uint32_t> adj_mask(static_cast<size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w : g.neighbors(v)) adj_mask[v] |= 1u << w;

  int best = 0;
  const std::uint32_t full = (1u << n) - 1;
  for (std::uint32_t subset = 1; subset <= full; ++subset) {
    int size = std::popcount(subset);
    if (size < 2) continue;
    // Density is maximized on a connected subgraph, so skip the rest.
    std::uint32_t seen = subset & (~subset + 1);
    std::uint32_t frontier = seen;
    while (frontier) {
      std::uint32_t next = 0;
      std::uint32_t f = frontier;
      while (f) {
        int v = std::countr_zero(f);
        f &= f - 1;
        next |= adj_mask[v] & subset & ~seen;
      }
      seen |= next;
      frontier = next;
    }
    if (seen != subset) continue;
    long long edges2 = 0;
    std::uint32_t s = subset;
    while (s) {
      int v = std::countr_zero(s);
      s &= s - 1;
      edges2 += std::popcount(adj_mask[v] & subset);
    }
    long long edges = edges2 / 2;
    int value = static_cast<int>((edges + size - 2) / (size - 1));
    best = std::max(best, value);
  }
  return best;
}

DensityReport density_report(const Graph& g) {
  DensityReport report;
  report.average_degree = g.average_degree();
  report.degeneracy = degeneracy(g);
  if (g.vertex_count() <= 16) report.exact_arboricity = exact_arboricity(g);
  return report;
}

namespace {

// Uniform labeled tree on n vertices via a random Pruefer sequence.
std::vector<Edge> random_spanning_tree(int n, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  if (n < 2) return edges;
  if (n == 2) {
    edges.emplace_back(0, 1);
    return edges;
  }
  std::vector<int> code(static_cast<size_t>(n) - 2);
  for (auto& c : code) c = static_cast<int>(bounded_uniform(rng, static_cast<std::uint64_t>(n)));
  std::vector<int> count(static_cast<size_t>(n), 0);
  for (int c : code) ++count[c];

  int ptr = 0;
  while (count[ptr] != 0) ++ptr;
  int leaf = ptr;
  for (int c : code) {
    edges.emplace_back(leaf, c);
    if (--count[c] == 0 && c < ptr) {
      leaf = c;
    } else {
      ++ptr;
      while (ptr < n && count[ptr] != 0) ++ptr;
      leaf = ptr;
    }
  }
  edges.emplace_back(leaf, n - 1);
  return edges;
}

}  // namespace

Graph generate_forest_union(int n, int alpha, std::uint64_t seed) {
  if (n < 1) throw input_error("forest union needs n >= 1");
  if (alpha < 1) throw input_error("forest union needs alpha >= 1");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (int round = 0; round < alpha; ++round) {
    auto tree = random_spanning_tree(n, rng);
    edges.insert(edges.end(), tree.begin(), tree.end());
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph::from_edges(n, edges);
}

Graph generate_random_graph(int n, long long m, std::uint64_t seed) {
  if (n < 0) throw input_error("negative vertex count");
  const long long pairs = static_cast<long long>(n) * (n - 1) / 2;
  if (m < 0 || m > pairs)
    throw input_error("requested " + std::to_string(m) + " edges but only " +
                      std::to_string(pairs) + " distinct pairs exist");
  std::mt19937_64 rng(seed);

  // Floyd's subset sampling: uniform m-subset of pair indices in O(m) space.
  std::vector<long long> chosen;
  chosen.reserve(static_cast<size_t>(m));
  std::unordered_set<long long> taken;
  for (long long j = pairs - m; j < pairs; ++j) {
    long long t = static_cast<long long>(bounded_uniform(rng, static_cast<std::uint64_t>(j) + 1));
    long long pick = taken.contains(t) ? j : t;
    taken.insert(pick);
    chosen.push_back(pick);
  }

  // Decode pair index -> (u, v) where indices enumerate (0,1),(0,2),...,(1,2),...
  std::vector<Edge> edges;
  edges.reserve(chosen.size());
  auto offset = [n](long long u) { return u * n - u * (u + 1) / 2; };
  for (long long idx : chosen) {
    long long lo = 0, hi = n - 1;
    while (lo < hi) {
      long long mid = (lo + hi + 1) / 2;
      if (offset(mid) <= idx)
        lo = mid;
      else
        hi = mid - 1;
    }
    long long u = lo;
    long long v = u + 1 + (idx - offset(u));
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  std::sort(edges.begin(), edges.end());
  return Graph::from_edges(n, edges);
}

}  // namespace bds
