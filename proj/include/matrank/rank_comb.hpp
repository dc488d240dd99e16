#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "matrank/budget.hpp"
#include "matrank/matrix.hpp"

namespace matrank {

// Combinatorial all-ones rectangle: row and column index sets as bit masks
// (bit i = index i).  Valid rectangles are nonempty on both sides and touch
// only 1-entries of their matrix.
struct Rectangle {
  std::uint64_t row_set = 0;
  std::uint64_t col_set = 0;
  friend bool operator==(const Rectangle&, const Rectangle&) = default;
  friend bool operator<(const Rectangle& a, const Rectangle& b) {
    if (a.row_set != b.row_set) return a.row_set < b.row_set;
    return a.col_set < b.col_set;
  }
};

// Rectangles exactly partitioning the 1-entries (pairwise disjoint).
struct PartitionCert {
  std::vector<Rectangle> rectangles;
};

// Rectangles jointly covering the 1-entries (overlaps allowed).
struct CoverCert {
  std::vector<Rectangle> rectangles;
};

// 1-entries no two of which lie in a common all-ones 2x2 submatrix: entries
// (i,j), (k,l) conflict when they share a row or column, or when both cross
// positions (i,l) and (k,j) hold ones.  0-based entries.
struct IsolationCert {
  std::vector<std::pair<int, int>> entries;
};

struct RankProfile {
  int real = 0;
  int binary = 0;
  PartitionCert partition;
  int boolean = 0;
  CoverCert cover;
  int isolation = 0;
  IsolationCert isolation_set;
};

// All inclusion-maximal all-ones rectangles, sorted by (row_set, col_set)
// as integers.  Requires at least one 1-entry.
std::vector<Rectangle> maximal_rectangles(const BinaryMatrix& m);

// Minimum number of all-ones rectangles partitioning the 1-entries, with an
// optimal certificate.  Exact branch-and-bound: branch on the
// lexicographically first uncovered 1 over every rectangle of the residual
// region containing it (optimal pieces need not be maximal in the residual),
// pruned by a greedy fooling-set lower bound.  Among
// optimal partitions the certificate is the lexicographically first under
// the solver's canonical branch order (pivot discovery order, rectangles
// compared by (row_set, col_set)), which makes output reproducible.
std::pair<int, PartitionCert> binary_rank(const BinaryMatrix& m, Budget* budget = nullptr);

// Minimum number of all-ones rectangles covering the 1-entries.  The search
// ranges over maximal rectangles only, which is exhaustive for covers.
// Certificate tie-breaking as for binary_rank.
std::pair<int, CoverCert> boolean_rank(const BinaryMatrix& m, Budget* budget = nullptr);

// Maximum size of an isolated set of 1-entries, by branch-and-bound maximum
// independent set on the conflict graph with a greedy clique-cover bound.
// The certificate is the lexicographically first maximum set in row-major
// entry order.
std::pair<int, IsolationCert> isolation_number(const BinaryMatrix& m, Budget* budget = nullptr);

bool verify(const BinaryMatrix& m, const PartitionCert& cert);
bool verify(const BinaryMatrix& m, const CoverCert& cert);
bool verify(const BinaryMatrix& m, const IsolationCert& cert);

// Rectangles (at most k of them) partitioning all ones of the k+1 lines
// named by a k-sum witness: the summand lines have disjoint supports, so
// each summand line is paired with the matching stretch of the target line.
// Throws std::invalid_argument when the witness does not hold in m.
std::vector<Rectangle> ksum_partition(const BinaryMatrix& m, const KSumWitness& w);

// The full quadruple with certificates.  Computed on the kernel and lifted
// back to original indices through the duplicate-line classes; all four
// quantities are invariant under that reduction.  Requires a 1-entry.
RankProfile rank_profile(const BinaryMatrix& m, Budget* budget = nullptr);

// Certificates for a Kronecker product, composed entrywise: rectangle pairs
// (Ra x Ca, Rb x Cb) become (Ra x Rb) x (Ca x Cb) under the product's index
// order (block row i*b_rows + k, block column j*b_cols + l).  A partition of
// A and a partition of B compose to a partition of kronecker(A, B) of size
// |A-cert| * |B-cert|; isolated sets compose likewise.  b_rows/b_cols are
// the dimensions of the right factor B.
PartitionCert kron_compose(const PartitionCert& a, const PartitionCert& b,
                           int b_rows, int b_cols);
IsolationCert kron_compose(const IsolationCert& a, const IsolationCert& b,
                           int b_rows, int b_cols);

}  // namespace matrank
