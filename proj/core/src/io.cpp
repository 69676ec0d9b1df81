#include "grove/io.hpp"

#include <istream>
#include <sstream>
#include <vector>

#include "grove/errors.hpp"
#include "grove/tree.hpp"

namespace grove {

namespace {

bool parse_two_ints(const std::string& line, long long& a, long long& b) {
  std::istringstream iss(line);
  if (!(iss >> a >> b)) return false;
  std::string rest;
  if (iss >> rest) return false;  // trailing junk
  return true;
}

}  // namespace

std::string to_edge_list(const Digraph& g) {
  std::string s = std::to_string(g.vertex_count()) + " " +
                  std::to_string(g.edge_count()) + "\n";
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v : g.out(u))
      s += std::to_string(u) + " " + std::to_string(v) + "\n";
  return s;
}

Digraph read_edge_list(const std::string& text) {
  if (text.empty() || text.back() != '\n')
    throw ParseError("edge list must end with a newline");

  std::vector<std::string> lines;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i)
    if (text[i] == '\n') {
      lines.push_back(text.substr(start, i - start));
      start = i + 1;
    }

  long long n = -1, m = -1;
  std::vector<std::pair<int, int>> edges;
  bool header_seen = false;
  for (const auto& line : lines) {
    if (!line.empty() && line[0] == '#') continue;
    long long a, b;
    if (!parse_two_ints(line, a, b))
      throw ParseError("malformed line: '" + line + "'");
    if (!header_seen) {
      header_seen = true;
      n = a;
      m = b;
      if (n < 0 || m < 0) throw ParseError("negative header values");
      continue;
    }
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw ParseError("edge endpoint out of range: " + line);
    if (a == b) throw ParseError("loop edge: " + line);
    edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
  }
  if (!header_seen) throw ParseError("missing 'n m' header");
  if (static_cast<long long>(edges.size()) != m)
    throw ParseError("edge count mismatch: header says " + std::to_string(m) +
                     ", got " + std::to_string(edges.size()));
  try {
    return Digraph::from_edges(static_cast<int>(n), edges);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

Digraph read_edge_list(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return read_edge_list(buf.str());
}

OrientedTree read_oriented_tree(std::istream& in) {
  return OrientedTree::from_digraph(read_edge_list(in));
}

std::string to_dot(const Digraph& g) {
  std::string s = "digraph G {\n";
  for (int v = 0; v < g.vertex_count(); ++v)
    s += "  v" + std::to_string(v) + ";\n";
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v : g.out(u))
      s += "  v" + std::to_string(u) + " -> v" + std::to_string(v) + ";\n";
  s += "}\n";
  return s;
}

}  // namespace grove
