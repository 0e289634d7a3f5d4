#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bds/rational.hpp"

namespace bds {

using Vertex = int;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Immutable simple undirected graph. Per-vertex neighbor lists are sorted by
// vertex id at construction and never reordered afterwards; the slot index of
// a neighbor is the position in that list, which is what the adjacency oracle
// and all "first Delta neighbors" marking rules key off.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : adj_(n) {}

  // Validates simplicity (throws input_error on self-loops, duplicates, or
  // out-of-range endpoints) and builds sorted adjacency.
  static Graph from_edges(int n, const std::vector<Edge>& edges);

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  long long edge_count() const { return m_; }

  int degree(Vertex v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
  }

  std::span<const Vertex> neighbors(Vertex v) const {
    check_vertex(v);
    return adj_[v];
  }

  // The adjacency oracle: i-th neighbor of v in slot order, or nullopt when
  // i >= deg(v) (the oracle's null sign).
  std::optional<Vertex> neighbor(Vertex v, int slot) const {
    check_vertex(v);
    if (slot < 0 || slot >= static_cast<int>(adj_[v].size())) return std::nullopt;
    return adj_[v][slot];
  }

  bool has_edge(Vertex u, Vertex v) const;

  // Slot index of v in u's list, or -1 when (u,v) is not an edge.
  int slot_of(Vertex u, Vertex v) const;

  // All edges, lexicographically sorted as (min endpoint, max endpoint).
  std::vector<Edge> edges() const;

  Rational average_degree() const {
    int n = vertex_count();
    if (n == 0) return Rational(0);
    return Rational(2 * m_, n);
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(Vertex v) const {
    if (v < 0 || v >= vertex_count())
      throw input_error("vertex id " + std::to_string(v) + " out of range [0, " +
                        std::to_string(vertex_count()) + ")");
  }

  std::vector<std::vector<Vertex>> adj_;
  long long m_ = 0;
};

// Degree threshold partition: high = degree >= delta, low = degree < delta.
struct HighLowSplit {
  int delta = 0;
  std::vector<Vertex> high;  // ascending
  std::vector<Vertex> low;   // ascending
  std::vector<char> high_flag;

  bool is_high(Vertex v) const { return high_flag[static_cast<size_t>(v)] != 0; }
};

HighLowSplit split_high_low(const Graph& g, int delta);

// A vertex-induced subgraph with dense local ids. `vertices[local] = original`
// is ascending, so local slot order is the restriction of the original one.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> vertices;

  Vertex to_original(Vertex local) const { return vertices[static_cast<size_t>(local)]; }
  // -1 when the original vertex is not part of the subgraph.
  Vertex to_local(Vertex original) const;
};

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

struct DensityReport {
  Rational average_degree;
  int degeneracy = 0;
  std::optional<int> exact_arboricity;  // only computed for n <= 16
};

// Core-decomposition degeneracy: max over the min-degree peeling order of the
// degree at removal time.
int degeneracy(const Graph& g);

// Exact Nash-Williams arboricity, max over vertex subsets U (|U| >= 2) of
// ceil(|E(U)|/(|U|-1)). Exhaustive over connected subsets; refuses n > 16
// with a capability_error.
int exact_arboricity(const Graph& g);

DensityReport density_report(const Graph& g);

// Union of `alpha` uniform random spanning trees (Pruefer-sampled) with
// duplicate edges merged, so the arboricity is at most alpha by construction.
Graph generate_forest_union(int n, int alpha, std::uint64_t seed);

// m distinct edges drawn uniformly from all unordered pairs.
Graph generate_random_graph(int n, long long m, std::uint64_t seed);

// Edge-list text format: `n m` on the first line, then one `u v` per edge
// with u < v, 0-based, edges sorted lexicographically on save. Lines starting
// with '#' are comments.
Graph load_graph(std::istream& in);
Graph load_graph(const std::string& path);
void save_graph(const Graph& g, std::ostream& out);
void save_graph(const Graph& g, const std::string& path);

}  // namespace bds
