#include "bds/sparsify.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

namespace bds {

int matching_delta(int alpha, Rational eps) {
  if (alpha < 1) throw input_error("alpha must be >= 1");
  if (!eps.is_positive()) throw input_error("eps must be positive");
  if (eps > Rational(1)) eps = Rational(1);
  return static_cast<int>((Rational(5) * (Rational(5) / eps + 1) * 2 * alpha).ceil());
}

int vc_delta(int alpha, Rational eps) {
  if (alpha < 1) throw input_error("alpha must be >= 1");
  if (!eps.is_positive()) throw input_error("eps must be positive");
  return static_cast<int>(((Rational(1) / eps + 1) * 2 * alpha).ceil());
}

int is_delta(Rational beta, Rational eps) {
  if (beta < Rational(1)) throw input_error("beta must be >= 1");
  if (!eps.is_positive()) throw input_error("eps must be positive");
  if (eps >= beta) throw input_error("the independent set sparsifier requires eps < beta");
  return static_cast<int>((((beta + 1) / eps + 1) * beta).ceil());
}

MatchingSparsifier build_matching_sparsifier(const Graph& g, int delta) {
  if (delta < 1) throw input_error("delta must be >= 1");
  // An edge survives iff each endpoint lists the other within its first
  // delta slots.
  std::vector<Edge> kept;
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    auto nbrs = g.neighbors(u);
    const int marked = std::min<int>(delta, static_cast<int>(nbrs.size()));
    for (int slot = 0; slot < marked; ++slot) {
      Vertex v = nbrs[slot];
      if (v < u) continue;  // handled from v's side
      if (g.slot_of(v, u) < delta) kept.emplace_back(u, v);
    }
  }
  MatchingSparsifier s;
  s.delta = delta;
  s.graph = Graph::from_edges(g.vertex_count(), kept);
  return s;
}

VcSparsifier build_vc_sparsifier(const Graph& g, int delta) {
  if (delta < 1) throw input_error("delta must be >= 1");
  auto split = split_high_low(g, delta);
  VcSparsifier s;
  s.delta = delta;
  s.g_low = induced_subgraph(g, split.low);
  s.validating_set = std::move(split.high);
  return s;
}

IsSparsifier build_is_sparsifier(const Graph& g, int delta) {
  if (delta < 1) throw input_error("delta must be >= 1");
  auto split = split_high_low(g, delta);
  IsSparsifier s;
  s.delta = delta;
  s.g_low = induced_subgraph(g, split.low);
  return s;
}

namespace {

void save_subgraph_edges(const InducedSubgraph& sub, int base_n, std::ostream& out) {
  auto local_edges = sub.graph.edges();
  out << base_n << ' ' << local_edges.size() << '\n';
  for (const Edge& e : local_edges)
    out << sub.to_original(e.u) << ' ' << sub.to_original(e.v) << '\n';
}

}  // namespace

void save_matching_sparsifier(const MatchingSparsifier& s, std::ostream& out) {
  out << "# delta=" << s.delta << '\n';
  save_graph(s.graph, out);
}

void save_vc_sparsifier(const VcSparsifier& s, int base_n, std::ostream& out) {
  out << "# delta=" << s.delta << '\n';
  out << "# validating=";
  for (size_t i = 0; i < s.validating_set.size(); ++i) {
    if (i > 0) out << ' ';
    out << s.validating_set[i];
  }
  out << '\n';
  save_subgraph_edges(s.g_low, base_n, out);
}

void save_is_sparsifier(const IsSparsifier& s, int base_n, std::ostream& out) {
  out << "# delta=" << s.delta << '\n';
  save_subgraph_edges(s.g_low, base_n, out);
}

SparsifierHeader read_sparsifier_header(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open " + path, 0);
  SparsifierHeader header;
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("# delta=", 0) == 0) {
      header.delta = std::stoi(line.substr(8));
    } else if (line.rfind("# validating=", 0) == 0) {
      std::istringstream ids(line.substr(13));
      Vertex v;
      while (ids >> v) header.validating_set.push_back(v);
    }
  }
  return header;
}

}  // namespace bds
