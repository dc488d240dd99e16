#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "doctest.h"
#include "matrank/constructions.hpp"
#include "matrank/graph.hpp"
#include "matrank/matrix.hpp"
#include "matrank/rank_comb.hpp"
#include "matrank/text_io.hpp"
#include "oracles.hpp"

using namespace matrank;

TEST_CASE("parse_graph reads the edge-list format") {
  BipartiteGraph g = parse_graph_string("3 2\n1 1\n2 1\n3 2\n");
  CHECK(g.left == 3);
  CHECK(g.right == 2);
  CHECK(g.edges == std::vector<std::pair<int, int>>{{0, 0}, {1, 0}, {2, 1}});

  // Blank lines and CRLF endings are tolerated.
  BipartiteGraph g2 = parse_graph_string("2 2\r\n\r\n1 2\n\n2 1\r\n");
  CHECK(g2.edges == std::vector<std::pair<int, int>>{{0, 1}, {1, 0}});

  auto pos = [](const std::string& text) {
    try {
      parse_graph_string(text);
    } catch (const ParseError& e) {
      return std::pair<int, int>{e.line, e.column};
    }
    return std::pair<int, int>{0, 0};
  };
  CHECK(pos("") != std::pair<int, int>{0, 0});            // missing header
  CHECK(pos("2\n1 1\n") != std::pair<int, int>{0, 0});    // truncated header
  CHECK(pos("2 2\n") != std::pair<int, int>{0, 0});       // no edges
  CHECK(pos("2 2\n3 1\n") != std::pair<int, int>{0, 0});  // endpoint out of range
  CHECK(pos("2 2\n1 0\n") != std::pair<int, int>{0, 0});  // endpoints are 1-based
  CHECK(pos("2 2\n1 1\n1 1\n") != std::pair<int, int>{0, 0});  // duplicate edge
  CHECK(pos("2 2\n1 1 1\n") != std::pair<int, int>{0, 0});     // trailing text
  CHECK(pos("0 2\n1 1\n") != std::pair<int, int>{0, 0});       // empty side

  // Positions point at the offending line.
  CHECK(pos("2 2\n1 1\nx 1\n") == std::pair<int, int>{3, 1});
}

TEST_CASE("adjacency_matrix and graph_from_matrix are inverse on basic data") {
  BipartiteGraph g = parse_graph_string("3 3\n1 1\n1 2\n2 2\n2 3\n3 3\n3 1\n1 3\n");
  BinaryMatrix adj = adjacency_matrix(g);
  CHECK(adj == BinaryMatrix::from_rows({"111", "011", "101"}));

  BipartiteGraph back = graph_from_matrix(adj);
  CHECK(back.left == 3);
  CHECK(back.right == 3);
  // Edges come back row-major; compare as sets.
  std::set<std::pair<int, int>> a(g.edges.begin(), g.edges.end());
  std::set<std::pair<int, int>> b(back.edges.begin(), back.edges.end());
  CHECK(a == b);
  CHECK(adjacency_matrix(back) == adj);

  // Round trip over random matrices (rows/cols with no edges survive via
  // the declared side sizes).
  std::mt19937_64 rng(401);
  for (int t = 0; t < 100; ++t) {
    BinaryMatrix m = oracles::random_matrix(rng, 1 + int(rng() % 6), 1 + int(rng() % 6));
    if (!m.has_one()) continue;
    CHECK(adjacency_matrix(graph_from_matrix(m)) == m);
  }

  CHECK_THROWS_AS(adjacency_matrix(BipartiteGraph{0, 3, {}}), std::invalid_argument);
  CHECK_THROWS_AS(adjacency_matrix(BipartiteGraph{65, 3, {}}), std::length_error);
}

TEST_CASE("biclique partition and cover numbers through the matrix bridge") {
  // The 8-cycle as a bipartite graph: its reduced adjacency matrix is the
  // 4x4 cyclic pattern, so the partition number is 4 while the real rank of
  // the matrix is only 3.
  BipartiteGraph c8 = parse_graph_string("4 4\n1 1\n1 2\n2 2\n2 3\n3 3\n3 4\n4 4\n4 1\n");
  BinaryMatrix m8 = adjacency_matrix(c8);
  CHECK(are_equivalent(m8, catalog_find("c4")->matrix));
  auto [bp, bp_cert] = binary_rank(m8);
  auto [bc, bc_cert] = boolean_rank(m8);
  CHECK(bp == 4);
  CHECK(bc == 4);
  CHECK(verify(m8, bp_cert));
  CHECK(verify(m8, bc_cert));

  // A 6-cycle plus one chord: partition 3, cover 2.
  BipartiteGraph chord = parse_graph_string("3 3\n1 1\n1 2\n2 2\n2 3\n3 3\n3 1\n1 3\n");
  BinaryMatrix mc = adjacency_matrix(chord);
  CHECK(binary_rank(mc).first == 3);
  CHECK(boolean_rank(mc).first == 2);

  // A single edge.
  BinaryMatrix one = adjacency_matrix(parse_graph_string("1 1\n1 1\n"));
  CHECK(binary_rank(one).first == 1);
  CHECK(boolean_rank(one).first == 1);

  // Complete bipartite graphs have partition and cover number 1.
  BipartiteGraph k23;
  k23.left = 2;
  k23.right = 3;
  for (int u = 0; u < 2; ++u)
    for (int v = 0; v < 3; ++v) k23.edges.emplace_back(u, v);
  CHECK(binary_rank(adjacency_matrix(k23)).first == 1);

  // Catalog matrices seen as graphs: the bridge changes nothing.
  for (const char* name : {"fig2.A7", "c4", "thm3.M1"}) {
    const BinaryMatrix& m = catalog_find(name)->matrix;
    BinaryMatrix via = adjacency_matrix(graph_from_matrix(m));
    CHECK(via == m);
  }
}
