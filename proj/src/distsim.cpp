#include "bds/distsim.hpp"

#include <algorithm>
#include <numeric>

namespace bds {

namespace {

std::vector<Vertex> resolve_schedule(const Graph& g, std::span<const Vertex> schedule) {
  const int n = g.vertex_count();
  std::vector<Vertex> order;
  if (schedule.empty()) {
    order.resize(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    return order;
  }
  if (static_cast<int>(schedule.size()) != n)
    throw input_error("schedule must enumerate every vertex exactly once");
  std::vector<char> seen(static_cast<size_t>(n), 0);
  for (Vertex v : schedule) {
    if (v < 0 || v >= n || seen[v])
      throw input_error("schedule must enumerate every vertex exactly once");
    seen[v] = 1;
  }
  order.assign(schedule.begin(), schedule.end());
  return order;
}

}  // namespace

LoadSummary load_report(const RoundLog& log) {
  LoadSummary summary;
  const size_t n = log.sent.size();
  if (n == 0) return summary;
  long long sent_total = 0, recv_total = 0;
  for (size_t v = 0; v < n; ++v) {
    summary.max_sent = std::max(summary.max_sent, log.sent[v]);
    summary.max_received = std::max(summary.max_received, log.received[v]);
    sent_total += log.sent[v];
    recv_total += log.received[v];
  }
  summary.mean_sent = static_cast<double>(sent_total) / static_cast<double>(n);
  summary.mean_received = static_cast<double>(recv_total) / static_cast<double>(n);
  return summary;
}

MatchingRoundResult run_one_round_matching_sparsifier(const Graph& g, int delta,
                                                      std::span<const Vertex> schedule) {
  if (delta < 1) throw input_error("delta must be >= 1");
  const int n = g.vertex_count();
  auto order = resolve_schedule(g, schedule);

  MatchingRoundResult result;
  result.log.rounds = 1;
  result.log.max_message_bits = 1;
  result.log.sent.assign(static_cast<size_t>(n), 0);
  result.log.received.assign(static_cast<size_t>(n), 0);

  // Send phase: marked[v][slot] = 1 for v's first min(delta, deg) slots.
  // Messages land in the recipient's inbox keyed by the recipient's own slot
  // for the sender, found locally by the recipient after the round.
  std::vector<std::vector<char>> got_mark(static_cast<size_t>(n));
  for (Vertex v = 0; v < n; ++v)
    got_mark[v].assign(static_cast<size_t>(g.degree(v)), 0);
  for (Vertex v : order) {
    auto nbrs = g.neighbors(v);
    const int send_count = std::min<int>(delta, static_cast<int>(nbrs.size()));
    for (int slot = 0; slot < send_count; ++slot) {
      Vertex to = nbrs[slot];
      got_mark[to][static_cast<size_t>(g.slot_of(to, v))] = 1;
      ++result.log.sent[v];
      ++result.log.received[to];
    }
  }

  // Receive phase: a vertex keeps the edges it marked itself and also got a
  // mark on.
  for (Vertex v : order) {
    auto nbrs = g.neighbors(v);
    const int marked = std::min<int>(delta, static_cast<int>(nbrs.size()));
    for (int slot = 0; slot < marked; ++slot) {
      Vertex u = nbrs[slot];
      if (u > v && got_mark[v][static_cast<size_t>(slot)]) result.edges.emplace_back(v, u);
    }
  }
  std::sort(result.edges.begin(), result.edges.end());
  return result;
}

HighLowRoundResult run_one_round_high_low(const Graph& g, int delta,
                                          std::span<const Vertex> schedule) {
  if (delta < 1) throw input_error("delta must be >= 1");
  const int n = g.vertex_count();
  auto order = resolve_schedule(g, schedule);

  HighLowRoundResult result;
  result.log.rounds = 1;
  result.log.max_message_bits = 1;
  result.log.sent.assign(static_cast<size_t>(n), 0);
  result.log.received.assign(static_cast<size_t>(n), 0);
  result.neighbor_is_low.resize(static_cast<size_t>(n));
  for (Vertex v = 0; v < n; ++v)
    result.neighbor_is_low[v].assign(static_cast<size_t>(g.degree(v)), 0);

  for (Vertex v : order) {
    const char low = g.degree(v) < delta ? 1 : 0;
    for (Vertex to : g.neighbors(v)) {
      result.neighbor_is_low[to][static_cast<size_t>(g.slot_of(to, v))] = low;
      ++result.log.sent[v];
      ++result.log.received[to];
    }
  }
  return result;
}

}  // namespace bds
