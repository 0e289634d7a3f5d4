#include "bds/local_access.hpp"

#include <algorithm>

namespace bds {

SparsifierOracle::SparsifierOracle(const Graph& g, int delta)
    : graph_(&g), delta_(delta), touched_(static_cast<size_t>(g.vertex_count()), 0) {
  if (delta < 1) throw input_error("delta must be >= 1");
}

void SparsifierOracle::begin_query() {
  counter_ = ProbeCounter{};
  for (Vertex v : touched_list_) touched_[v] = 0;
  touched_list_.clear();
}

std::optional<Vertex> SparsifierOracle::probe(Vertex at, int slot) {
  ++counter_.slot_probes;
  if (!touched_[at]) {
    touched_[at] = 1;
    touched_list_.push_back(at);
    ++counter_.distinct_vertices_probed;
  }
  return graph_->neighbor(at, slot);
}

std::vector<Vertex> SparsifierOracle::sparsifier_adjacency(Vertex v) {
  begin_query();
  std::vector<Vertex> result;
  for (int slot = 0; slot < delta_; ++slot) {
    auto u = probe(v, slot);
    if (!u) break;  // past the end of v's list, so v marked every edge
    // Symmetric probe: scan u's first delta slots for v.
    bool mutual = false;
    for (int back = 0; back < delta_; ++back) {
      auto w = probe(*u, back);
      if (!w) break;
      if (*w == v) {
        mutual = true;
        break;
      }
    }
    if (mutual) result.push_back(*u);
  }
  return result;
}

bool SparsifierOracle::is_in_validating_set(Vertex v) {
  begin_query();
  return probe(v, delta_ - 1).has_value();
}

ProbeCounter SparsifierOracle::probe_stats() {
  ProbeCounter snapshot = counter_;
  counter_ = ProbeCounter{};
  for (Vertex v : touched_list_) touched_[v] = 0;
  touched_list_.clear();
  return snapshot;
}

}  // namespace bds
