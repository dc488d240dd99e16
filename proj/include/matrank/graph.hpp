#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "matrank/matrix.hpp"

namespace matrank {

// Bipartite graph with an explicit bipartition.  Vertices are stored
// 0-based; the text format numbers each side from 1.
struct BipartiteGraph {
  int left = 0;
  int right = 0;
  std::vector<std::pair<int, int>> edges;  // (left vertex, right vertex)
};

// Edge-list format: a header line "L R" (side sizes), then one edge "u v"
// per line with 1 <= u <= L and 1 <= v <= R.  Requires at least one edge
// and no duplicates.  Throws ParseError (text_io) with a 1-based position.
BipartiteGraph parse_graph(std::istream& in);
BipartiteGraph parse_graph_string(const std::string& text);

// Reduced adjacency matrix: rows are left vertices, columns right vertices,
// entry (i, j) = 1 iff the edge (i, j) is present.  The biclique partition
// and cover numbers of the graph equal the binary and Boolean rank of this
// matrix.  Throws std::length_error when a side exceeds the dimension cap.
BinaryMatrix adjacency_matrix(const BipartiteGraph& g);

// The bipartite graph whose reduced adjacency matrix is m (rows on the
// left, columns on the right, one edge per 1-entry).
BipartiteGraph graph_from_matrix(const BinaryMatrix& m);

}  // namespace matrank
