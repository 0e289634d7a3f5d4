#pragma once

#include <span>
#include <vector>

#include "bds/graph.hpp"

namespace bds {

// Accounting for one synchronous message-passing round.
struct RoundLog {
  int rounds = 0;
  std::vector<long long> sent;      // per vertex
  std::vector<long long> received;  // per vertex
  int max_message_bits = 0;
};

struct LoadSummary {
  long long max_sent = 0;
  double mean_sent = 0.0;
  long long max_received = 0;
  double mean_received = 0.0;
};

LoadSummary load_report(const RoundLog& log);

struct MatchingRoundResult {
  std::vector<Edge> edges;
  RoundLog log;
};

// One-round construction of the matching sparsifier: every vertex sends a
// 1-bit mark along its first min(delta, deg) slots; an edge joins the output
// iff both endpoints sent on it. `schedule` permutes the order in which
// vertex handlers run; the result must not depend on it.
MatchingRoundResult run_one_round_matching_sparsifier(const Graph& g, int delta,
                                                      std::span<const Vertex> schedule = {});

struct HighLowRoundResult {
  // knowledge[v][slot] = 1 iff the neighbor in that adjacency slot announced
  // degree < delta.
  std::vector<std::vector<char>> neighbor_is_low;
  RoundLog log;
};

// One-round high/low discovery: every vertex announces its own status (its
// degree is locally known) along all of its edges.
HighLowRoundResult run_one_round_high_low(const Graph& g, int delta,
                                          std::span<const Vertex> schedule = {});

}  // namespace bds
