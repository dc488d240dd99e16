#include "matrank/graph.hpp"

#include <cctype>
#include <istream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

#include "matrank/text_io.hpp"

namespace matrank {

namespace {

void strip_cr(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

bool is_blank(const std::string& line) {
  for (char c : line)
    if (c != ' ' && c != '\t') return false;
  return true;
}

// Two positive integers on one line; anything else is an error.
std::pair<long, long> parse_int_pair(const std::string& line, int line_no,
                                     const char* first, const char* second) {
  std::size_t pos = 0;
  auto skip_blanks = [&] {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
  };
  auto read_long = [&](const char* what) -> long {
    skip_blanks();
    const std::size_t start = pos;
    while (pos < line.size() && std::isdigit(static_cast<unsigned char>(line[pos]))) ++pos;
    if (pos == start)
      throw ParseError(line_no, static_cast<int>(pos) + 1,
                       std::string("expected ") + what);
    try {
      return std::stol(line.substr(start, pos - start));
    } catch (const std::out_of_range&) {
      throw ParseError(line_no, static_cast<int>(start) + 1, "number out of range");
    }
  };
  const long a = read_long(first);
  const long b = read_long(second);
  skip_blanks();
  if (pos != line.size())
    throw ParseError(line_no, static_cast<int>(pos) + 1, "unexpected trailing text");
  return {a, b};
}

}  // namespace

BipartiteGraph parse_graph(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError(1, 1, "missing header line");
  strip_cr(line);
  const auto [left, right] =
      parse_int_pair(line, 1, "left side size", "right side size");
  if (left < 1 || right < 1) throw ParseError(1, 1, "side sizes must be positive");

  BipartiteGraph g;
  g.left = static_cast<int>(left);
  g.right = static_cast<int>(right);
  std::set<std::pair<int, int>> seen;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    strip_cr(line);
    if (is_blank(line)) continue;
    const auto [u, v] = parse_int_pair(line, line_no, "left endpoint", "right endpoint");
    if (u < 1 || u > left)
      throw ParseError(line_no, 1, "left endpoint out of range 1.." + std::to_string(left));
    if (v < 1 || v > right)
      throw ParseError(line_no, 1, "right endpoint out of range 1.." + std::to_string(right));
    const std::pair<int, int> e{static_cast<int>(u) - 1, static_cast<int>(v) - 1};
    if (!seen.insert(e).second) throw ParseError(line_no, 1, "duplicate edge");
    g.edges.push_back(e);
  }
  if (g.edges.empty()) throw ParseError(line_no + 1, 1, "at least one edge is required");
  return g;
}

BipartiteGraph parse_graph_string(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

BinaryMatrix adjacency_matrix(const BipartiteGraph& g) {
  if (g.left < 1 || g.right < 1)
    throw std::invalid_argument("adjacency_matrix: empty side");
  if (g.left > BinaryMatrix::kMaxDim || g.right > BinaryMatrix::kMaxDim)
    throw std::length_error("adjacency_matrix: side exceeds the dimension cap");
  BinaryMatrix m(g.left, g.right);
  for (const auto& [u, v] : g.edges) {
    if (u < 0 || u >= g.left || v < 0 || v >= g.right)
      throw std::invalid_argument("adjacency_matrix: edge endpoint out of range");
    m.set(u, v, true);
  }
  return m;
}

BipartiteGraph graph_from_matrix(const BinaryMatrix& m) {
  BipartiteGraph g;
  g.left = m.rows();
  g.right = m.cols();
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (m.get(i, j)) g.edges.emplace_back(i, j);
  return g;
}

}  // namespace matrank
