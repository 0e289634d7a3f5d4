#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "bds/graph.hpp"
#include "bds/rational.hpp"

namespace bds {

// Degree threshold for the matching sparsifier: ceil(5 * (5/eps + 1) * 2*alpha)
// with eps clamped to at most 1.
int matching_delta(int alpha, Rational eps);

// Degree threshold for the vertex cover sparsifier: ceil((1/eps + 1) * 2*alpha).
int vc_delta(int alpha, Rational eps);

// Degree threshold for the independent set sparsifier:
// ceil(((beta+1)/eps + 1) * beta), requiring beta >= 1 and 0 < eps < beta.
int is_delta(Rational beta, Rational eps);

// Subgraph of edges marked by both endpoints when every vertex marks its
// first min(delta, deg) adjacency slots. Same vertex set as the base graph;
// max degree <= delta.
struct MatchingSparsifier {
  int delta = 0;
  Graph graph;
};

MatchingSparsifier build_matching_sparsifier(const Graph& g, int delta);

// The pair (G[low], V_high): any cover of g_low plus the validating set is a
// valid cover of the base graph.
struct VcSparsifier {
  int delta = 0;
  InducedSubgraph g_low;
  std::vector<Vertex> validating_set;  // V_high, ascending
};

VcSparsifier build_vc_sparsifier(const Graph& g, int delta);

// G[low] alone: any independent set of g_low is independent in the base graph.
struct IsSparsifier {
  int delta = 0;
  InducedSubgraph g_low;
};

IsSparsifier build_is_sparsifier(const Graph& g, int delta);

// Serialization: the edge-list format of the base id space preceded by
// `# delta=<value>` and, for the VC sparsifier, `# validating=<ids>`.
void save_matching_sparsifier(const MatchingSparsifier& s, std::ostream& out);
void save_vc_sparsifier(const VcSparsifier& s, int base_n, std::ostream& out);
void save_is_sparsifier(const IsSparsifier& s, int base_n, std::ostream& out);

struct SparsifierHeader {
  std::optional<int> delta;
  std::vector<Vertex> validating_set;
};

// Reads the `# delta=` / `# validating=` comment headers back from a file.
SparsifierHeader read_sparsifier_header(const std::string& path);

}  // namespace bds
