#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "matrank/matrix.hpp"

namespace matrank {

// Circulant n x n matrix (n even, >= 4): the first row is n/2 ones followed
// by n/2 zeros, and each later row is the previous one cyclically shifted
// right by one position.  Throws std::invalid_argument otherwise.
BinaryMatrix circulant_C(int n);

// The (2k+1) x (2k+1) matrix (k >= 3) obtained from circulant_C(2k) by
// appending the sum of rows 1 and k+1 (the all-ones row) and then the column
// Y_{2k+1} = Y_{2k} - Y_{2k-1} + Y_{2k-2} of the augmented matrix, which is
// 0,1-valued.  Throws std::invalid_argument for k < 3.
BinaryMatrix odd_gap_matrix(int k);

// J_n - I_n (n >= 3): zero main diagonal, ones elsewhere.  Throws
// std::invalid_argument for n < 3.
BinaryMatrix diag_complement_D(int n);

// Block-diagonal d x d matrix (d >= 3): an identity block of size d-3
// followed by the 3x3 block [[1,1,0],[0,1,1],[1,1,1]].  Throws
// std::invalid_argument for d < 3.
BinaryMatrix block_gap_matrix(int d);

// Values a catalog entry is pinned to; -1 marks quantities left open.
struct ExpectedProfile {
  int real = -1;
  int binary = -1;
  int boolean = -1;
  int isolation = -1;
};

// A named literal matrix with its pinned profile values and a checksum of
// its text serialization guarding against transcription drift.
struct CatalogEntry {
  std::string name;
  BinaryMatrix matrix;
  ExpectedProfile expected;
  std::uint64_t checksum = 0;
};

// The named matrices in a fixed order: fig2.A1..A7, fig3.A1..A3, c4, c6,
// lemma17.m1, lemma17.m2, thm3.M1, thm3.M2.
const std::vector<CatalogEntry>& catalog();

// Entry by name, accepting the aliases lemma14.A1..A3 for fig3.A1..A3;
// nullptr when unknown.
const CatalogEntry* catalog_find(std::string_view name);

// 64-bit FNV-1a over bytes; used for the catalog transcription checksums.
std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace matrank
