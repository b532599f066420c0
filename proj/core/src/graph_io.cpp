#include "kpath/graph_io.hpp"

#include <sstream>
#include <utility>
#include <vector>

namespace kpath {

namespace {

struct EdgeList {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // 0-indexed
};

bool data_line(std::string_view line) {
  for (char c : line) {
    if (c == '#') return false;
    if (!std::isspace(static_cast<unsigned char>(c))) return true;
  }
  return false;
}

EdgeList parse_edge_list(std::string_view text, bool undirected) {
  EdgeList result;
  std::istringstream input{std::string(text)};
  std::string line;
  int line_no = 0;
  bool have_header = false;
  long long m = 0;
  long long seen = 0;

  while (std::getline(input, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!data_line(line)) continue;
    std::istringstream fields(line);
    if (!have_header) {
      long long n = -1;
      if (!(fields >> n >> m) || n < 0 || m < 0)
        throw ParseError(line_no, "expected header 'n m'");
      std::string extra;
      if (fields >> extra) throw ParseError(line_no, "trailing tokens after header");
      if (n > 1'000'000'000) throw ParseError(line_no, "vertex count too large");
      result.n = static_cast<int>(n);
      have_header = true;
      continue;
    }
    if (seen == m) throw ParseError(line_no, "more edge lines than the header announced");
    long long u = 0, v = 0;
    if (!(fields >> u >> v)) throw ParseError(line_no, "expected edge 'u v'");
    std::string extra;
    if (fields >> extra) throw ParseError(line_no, "trailing tokens after edge");
    if (u < 1 || u > result.n || v < 1 || v > result.n)
      throw ParseError(line_no, "edge endpoint out of range [1, n]");
    if (undirected && u == v) throw ParseError(line_no, "self-loop not allowed in an undirected graph");
    result.edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
    ++seen;
  }
  if (!have_header) throw ParseError(line_no, "missing header 'n m'");
  if (seen < m) throw ParseError(line_no, "fewer edge lines than the header announced");
  return result;
}

}  // namespace

Digraph parse_digraph(std::string_view text) {
  const EdgeList list = parse_edge_list(text, /*undirected=*/false);
  return make_digraph(list.n, list.edges);
}

Ugraph parse_ugraph(std::string_view text) {
  const EdgeList list = parse_edge_list(text, /*undirected=*/true);
  return make_ugraph(list.n, list.edges);
}

}  // namespace kpath
