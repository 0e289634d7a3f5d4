#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "bds/graph.hpp"
#include "bds/rational.hpp"

namespace bds {

struct Matching {
  std::vector<Edge> edges;

  int size() const { return static_cast<int>(edges.size()); }
  // partner[v] = matched partner, or -1 when v is free.
  std::vector<Vertex> partner_map(int n) const;
};

struct VertexCover {
  std::vector<Vertex> vertices;  // ascending
  int size() const { return static_cast<int>(vertices.size()); }
};

struct IndependentSet {
  std::vector<Vertex> vertices;  // ascending
  int size() const { return static_cast<int>(vertices.size()); }
};

// Branch node budget for the exact desk-scale solvers. They throw
// capability_error when exceeded rather than silently returning bad answers.
inline constexpr long long kDefaultNodeBudget = 10'000'000;

// Greedy maximal matching over edges in lexicographic (min, max) order, or an
// explicit edge ordering.
Matching greedy_maximal_matching(const Graph& g);
Matching greedy_maximal_matching(const Graph& g, std::span<const Edge> order);

// Exact maximum-cardinality matching by branch and bound (leaf-edge forcing,
// path/cycle closed forms, degree-based upper bound).
Matching max_matching_exact(const Graph& g, long long node_budget = kDefaultNodeBudget);

// (1+eps)-maximum matching: exhaustively augments along alternating paths of
// length <= 2*ceil(1/eps)-1 until none remain.
Matching approx_matching_short_augment(const Graph& g, const Rational& eps);

// Smallest eta such that m is an eta-maximal matching of g: (max number of
// edges addable to m) / |m|. nullopt encodes an infinite eta (|m| = 0 while
// edges could be added); an empty matching of an edgeless graph has eta 0.
std::optional<Rational> eta_maximality(const Graph& g, const Matching& m,
                                       long long node_budget = kDefaultNodeBudget);

// Exact minimum vertex cover by branch and bound (degree-1 forcing, component
// split, matching lower bound, include-v / include-N(v) branching).
VertexCover min_vc_exact(const Graph& g, long long node_budget = kDefaultNodeBudget);

// Both endpoints of every matched edge; a 2-approx cover when m is maximal.
VertexCover vc_from_matching(const Matching& m);

// vc_low must cover every edge of G[low]; returns vc_low united with the
// validating set split.high. Throws input_error when vc_low does not cover
// G[low].
VertexCover assemble_vc(const Graph& g, const HighLowSplit& split, const VertexCover& vc_low);

// Exact maximum independent set by branch and bound (degree-1 forcing,
// component split, include/exclude branching on a max-degree vertex).
IndependentSet max_is_exact(const Graph& g, long long node_budget = kDefaultNodeBudget);

// Repeatedly takes a minimum-degree vertex and deletes its closed
// neighborhood; meets the Turan bound n/(average_degree+1).
IndependentSet greedy_is_min_degree(const Graph& g);

bool verify_matching(const Graph& g, const Matching& m);
bool verify_vc(const Graph& g, const VertexCover& cover);
bool verify_is(const Graph& g, const IndependentSet& iset);

// `# type=<matching|vc|is>` header, then one edge or vertex per line.
void save_matching(const Matching& m, std::ostream& out);
void save_vertex_cover(const VertexCover& cover, std::ostream& out);
void save_independent_set(const IndependentSet& iset, std::ostream& out);

}  // namespace bds
