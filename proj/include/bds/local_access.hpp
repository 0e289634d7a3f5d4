#pragma once

#include <vector>

#include "bds/graph.hpp"

namespace bds {

struct ProbeCounter {
  long long distinct_vertices_probed = 0;
  long long slot_probes = 0;
};

// Answers matching-sparsifier adjacency queries by probing the base graph's
// slot oracle, never touching more than the queried vertex and its first
// min(delta, deg) neighbors. Counters cover the most recent query.
class SparsifierOracle {
 public:
  SparsifierOracle(const Graph& g, int delta);

  // Neighbors of v in the sparsifier, i.e. mutually marked edges. Probes v's
  // first min(delta, deg) slots plus, per candidate neighbor u, u's first
  // min(delta, deg(u)) slots (early exit once v is seen).
  std::vector<Vertex> sparsifier_adjacency(Vertex v);

  // deg(v) >= delta, decided by probing v's slot delta-1 only.
  bool is_in_validating_set(Vertex v);

  // Returns the counters for the last query and resets them to zero.
  ProbeCounter probe_stats();

  int delta() const { return delta_; }

 private:
  void begin_query();
  std::optional<Vertex> probe(Vertex at, int slot);

  const Graph* graph_;
  int delta_;
  ProbeCounter counter_;
  std::vector<char> touched_;
  std::vector<Vertex> touched_list_;
};

}  // namespace bds
