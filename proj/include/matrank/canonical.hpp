#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "matrank/matrix.hpp"

namespace matrank {

// Total order on equivalence classes of 0,1 matrices under row permutation,
// column permutation, and transpose.  Two matrices are equivalent iff their
// keys compare equal.  The key stores the shape-normalized dimensions
// (rows <= cols; square stays square) and the lexicographically smallest
// sorted row-label sequence achievable over the group, using the row-label
// convention of row_labels (first column most significant).
struct CanonicalKey {
  int rows = 0;
  int cols = 0;
  std::vector<std::uint64_t> labels;  // ascending, one per row

  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
  friend auto operator<=>(const CanonicalKey& a, const CanonicalKey& b) {
    if (auto c = a.rows <=> b.rows; c != 0) return c;
    if (auto c = a.cols <=> b.cols; c != 0) return c;
    return a.labels <=> b.labels;
  }

  // Lowercase hex: one byte per dimension, then each label as ceil(cols/8)
  // big-endian bytes.  Reproducible across runs and platforms.
  std::string hex() const;
};

// The canonical key of the class of m.
CanonicalKey canonical_key(const BinaryMatrix& m);

// The class representative (the matrix realizing the key, rows sorted by
// ascending label) together with the key.  Idempotent on its own output.
std::pair<BinaryMatrix, CanonicalKey> canonical_form(const BinaryMatrix& m);

// True iff a and b differ only by row/column permutations and transpose.
bool are_equivalent(const BinaryMatrix& a, const BinaryMatrix& b);

}  // namespace matrank
