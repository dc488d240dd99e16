#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace matrank {

// Dense 0,1 matrix with one 64-bit word per row: bit j of row_bits(i) holds
// entry (i, j).  Bits at column cols() and beyond are always zero.  Both
// dimensions are capped at 64 so that row and column sets fit in one word.
class BinaryMatrix {
 public:
  static constexpr int kMaxDim = 64;

  BinaryMatrix(int rows, int cols);

  // Rows given as strings over {0,1}, e.g. {"110", "011"}.
  static BinaryMatrix from_rows(const std::vector<std::string>& rows);
  static BinaryMatrix identity(int n);
  static BinaryMatrix all_ones(int rows, int cols);

  int rows() const { return n_; }
  int cols() const { return m_; }

  bool get(int i, int j) const { return (bits_[static_cast<std::size_t>(i)] >> j) & 1u; }
  void set(int i, int j, bool value);

  std::uint64_t row_bits(int i) const { return bits_[static_cast<std::size_t>(i)]; }
  void assign_row_bits(int i, std::uint64_t bits);
  std::uint64_t col_bits(int j) const;

  // Low cols() bits set; the valid bit range of every row word.
  std::uint64_t full_row_mask() const;

  int ones_count() const;
  bool has_one() const;

  friend bool operator==(const BinaryMatrix& a, const BinaryMatrix& b) {
    return a.n_ == b.n_ && a.m_ == b.m_ && a.bits_ == b.bits_;
  }
  friend bool operator!=(const BinaryMatrix& a, const BinaryMatrix& b) { return !(a == b); }

  // Container ordering on (rows, cols, row words); unrelated to equivalence.
  friend bool operator<(const BinaryMatrix& a, const BinaryMatrix& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    if (a.m_ != b.m_) return a.m_ < b.m_;
    return a.bits_ < b.bits_;
  }

 private:
  int n_;
  int m_;
  std::vector<std::uint64_t> bits_;
};

enum class Axis { kRow, kCol };

// k lines (all rows or all columns) whose entrywise integer sum equals
// another line of the same kind.  Indices are 0-based and summands strictly
// increasing; target is never one of the summands.
struct KSumWitness {
  Axis axis;
  std::vector<int> summands;
  int target;
};

BinaryMatrix transpose(const BinaryMatrix& m);

// No zero row/column and no repeated row/column.
bool is_basic(const BinaryMatrix& m);

struct KernelResult {
  BinaryMatrix kernel;
  // Original line indices collapsing onto each surviving kernel line, first
  // occurrence first (the representative kept by the reduction).
  std::vector<std::vector<int>> row_classes;
  std::vector<std::vector<int>> col_classes;
};

// Deletes zero lines and repeated lines (keeping first occurrences), rows
// then columns, re-checking until a fixed point.  Throws std::domain_error
// with message "empty kernel" when m has no 1 at all.
KernelResult kernel_with_classes(const BinaryMatrix& m);
BinaryMatrix kernel(const BinaryMatrix& m);

// First witness in scan order: row axis before column axis; within an axis,
// summand index tuples in lexicographic order, then target index ascending.
std::optional<KSumWitness> find_k_sum(const BinaryMatrix& m, int k);
std::optional<KSumWitness> find_k_sum_axis(const BinaryMatrix& m, int k, Axis axis);

// Throws std::length_error when a product dimension would exceed kMaxDim.
BinaryMatrix kronecker(const BinaryMatrix& a, const BinaryMatrix& b);

// label_i = sum_j m(i,j) * 2^(cols-1-j): row read as a binary numeral with
// column 1 most significant.  Requires cols() <= 63.
std::vector<std::uint64_t> row_labels(const BinaryMatrix& m);

// Restriction to the given index lists, preserving list order.  Throws
// std::out_of_range on bad indices and std::invalid_argument on empty or
// repeated index lists.
BinaryMatrix submatrix(const BinaryMatrix& m, const std::vector<int>& row_idx,
                       const std::vector<int>& col_idx);

}  // namespace matrank
