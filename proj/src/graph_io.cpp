#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <unordered_set>

#include "bds/graph.hpp"

namespace bds {

namespace {

bool blank_or_comment(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Graph load_graph(std::istream& in) {
  std::string line;
  int line_no = 0;
  long long n = -1, m = -1;
  std::vector<Edge> edges;
  std::unordered_set<long long> edge_keys;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank_or_comment(line)) continue;
    std::istringstream fields(line);
    if (n < 0) {
      if (!(fields >> n >> m) || n < 0 || m < 0)
        throw parse_error("expected header 'n m'", line_no);
      long long extra;
      if (fields >> extra) throw parse_error("trailing tokens after header", line_no);
      continue;
    }
    long long u, v;
    if (!(fields >> u >> v)) throw parse_error("expected edge 'u v'", line_no);
    long long extra;
    if (fields >> extra) throw parse_error("trailing tokens after edge", line_no);
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw parse_error("edge endpoint out of range", line_no);
    if (u == v) throw parse_error("self-loop", line_no);
    if (u > v) std::swap(u, v);
    long long key = u * n + v;
    if (!edge_keys.insert(key).second) throw parse_error("duplicate edge", line_no);
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    if (static_cast<long long>(edges.size()) > m)
      throw parse_error("more edges than declared in header", line_no);
  }
  if (n < 0) throw parse_error("missing header 'n m'", line_no);
  if (static_cast<long long>(edges.size()) != m)
    throw parse_error("declared " + std::to_string(m) + " edges, found " +
                          std::to_string(edges.size()),
                      line_no);
  return Graph::from_edges(static_cast<int>(n), edges);
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open " + path, 0);
  return load_graph(in);
}

void save_graph(const Graph& g, std::ostream& out) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

void save_graph(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw parse_error("cannot open " + path + " for writing", 0);
  save_graph(g, out);
}

}  // namespace bds
