#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace bds::testing {

int enumerate_max_matching_size(const Graph& g) {
  const auto edges = g.edges();
  std::vector<char> used(static_cast<size_t>(g.vertex_count()), 0);
  std::function<int(size_t)> rec = [&](size_t i) -> int {
    if (i == edges.size()) return 0;
    int best = rec(i + 1);
    const Edge& e = edges[i];
    if (!used[e.u] && !used[e.v]) {
      used[e.u] = used[e.v] = 1;
      best = std::max(best, 1 + rec(i + 1));
      used[e.u] = used[e.v] = 0;
    }
    return best;
  };
  return rec(0);
}

namespace {

std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
  if (g.vertex_count() > 24) throw std::runtime_error("oracle limited to n <= 24");
  std::vector<std::uint32_t> mask(static_cast<size_t>(g.vertex_count()), 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    for (Vertex w : g.neighbors(v)) mask[v] |= 1u << w;
  return mask;
}

}  // namespace

int enumerate_max_is_size(const Graph& g) {
  const int n = g.vertex_count();
  auto mask = adjacency_masks(g);
  int best = 0;
  for (std::uint32_t subset = 0; subset < (1u << n); ++subset) {
    bool independent = true;
    for (int v = 0; v < n && independent; ++v)
      if ((subset >> v) & 1u)
        if (mask[v] & subset) independent = false;
    if (independent) best = std::max(best, std::popcount(subset));
  }
  return best;
}

int enumerate_min_vc_size(const Graph& g) {
  const int n = g.vertex_count();
  auto mask = adjacency_masks(g);
  int best = n;
  for (std::uint32_t subset = 0; subset < (1u << n); ++subset) {
    bool covers = true;
    for (int v = 0; v < n && covers; ++v)
      if (!((subset >> v) & 1u))
        if (mask[v] & ~subset) covers = false;
    if (covers) best = std::min(best, std::popcount(subset));
  }
  return best;
}

namespace {

struct ForestPartition {
  const std::vector<Edge>& edges;
  int n;
  int k;
  // parent[c][v] for a plain union-find per color; rebuilt on backtrack via
  // full undo records.
  std::vector<std::vector<int>> parent;

  int find(int c, int v) {
    while (parent[c][v] != v) v = parent[c][v];
    return v;
  }

  bool assign(size_t i) {
    if (i == edges.size()) return true;
    const Edge& e = edges[i];
    for (int c = 0; c < k; ++c) {
      int ru = find(c, e.u), rv = find(c, e.v);
      if (ru == rv) continue;  // would close a cycle in color c
      parent[c][ru] = rv;
      if (assign(i + 1)) return true;
      parent[c][ru] = ru;
    }
    return false;
  }
};

}  // namespace

int min_forest_partition(const Graph& g) {
  const auto edges = g.edges();
  if (edges.empty()) return 0;
  for (int k = 1;; ++k) {
    ForestPartition fp{edges, g.vertex_count(), k, {}};
    fp.parent.assign(static_cast<size_t>(k), std::vector<int>(g.vertex_count()));
    for (auto& p : fp.parent) std::iota(p.begin(), p.end(), 0);
    if (fp.assign(0)) return k;
  }
}

bool has_augmenting_path_up_to(const Graph& g, const std::vector<Vertex>& partner, int max_len) {
  const int n = g.vertex_count();
  std::vector<char> on_path(static_cast<size_t>(n), 0);
  std::function<bool(Vertex, int)> search = [&](Vertex x, int used) -> bool {
    for (Vertex w : g.neighbors(x)) {
      if (on_path[w]) continue;
      if (used + 1 <= max_len && partner[w] == -1) return true;
      Vertex y = partner[w];
      if (y == -1 || on_path[y] || used + 3 > max_len) continue;
      on_path[w] = on_path[y] = 1;
      if (search(y, used + 2)) return true;
      on_path[w] = on_path[y] = 0;
    }
    return false;
  };
  for (Vertex v = 0; v < n; ++v) {
    if (partner[v] != -1) continue;
    on_path[v] = 1;
    if (search(v, 0)) return true;
    on_path[v] = 0;
  }
  return false;
}

}  // namespace bds::testing
