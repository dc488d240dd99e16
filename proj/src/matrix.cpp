#include "matrank/matrix.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace matrank {

namespace {

void check_dims(int rows, int cols) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("matrix dimensions must be positive");
  if (rows > BinaryMatrix::kMaxDim || cols > BinaryMatrix::kMaxDim)
    throw std::length_error("matrix dimension cap (64) exceeded");
}

}  // namespace

BinaryMatrix::BinaryMatrix(int rows, int cols) : n_(rows), m_(cols) {
  check_dims(rows, cols);
  bits_.assign(static_cast<std::size_t>(rows), 0);
}

BinaryMatrix BinaryMatrix::from_rows(const std::vector<std::string>& rows) {
  if (rows.empty()) throw std::invalid_argument("no rows given");
  BinaryMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows(); ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != m.cols())
      throw std::invalid_argument("ragged row lengths");
    for (int j = 0; j < m.cols(); ++j) {
      char c = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (c != '0' && c != '1') throw std::invalid_argument("row characters must be 0 or 1");
      m.set(i, j, c == '1');
    }
  }
  return m;
}

BinaryMatrix BinaryMatrix::identity(int n) {
  BinaryMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

BinaryMatrix BinaryMatrix::all_ones(int rows, int cols) {
  BinaryMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) m.bits_[static_cast<std::size_t>(i)] = m.full_row_mask();
  return m;
}

void BinaryMatrix::set(int i, int j, bool value) {
  std::uint64_t bit = std::uint64_t{1} << j;
  if (value)
    bits_[static_cast<std::size_t>(i)] |= bit;
  else
    bits_[static_cast<std::size_t>(i)] &= ~bit;
}

void BinaryMatrix::assign_row_bits(int i, std::uint64_t bits) {
  bits_[static_cast<std::size_t>(i)] = bits & full_row_mask();
}

std::uint64_t BinaryMatrix::col_bits(int j) const {
  std::uint64_t out = 0;
  for (int i = 0; i < n_; ++i) out |= static_cast<std::uint64_t>(get(i, j)) << i;
  return out;
}

std::uint64_t BinaryMatrix::full_row_mask() const {
  return m_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m_) - 1;
}

int BinaryMatrix::ones_count() const {
  int total = 0;
  for (std::uint64_t w : bits_) total += std::popcount(w);
  return total;
}

bool BinaryMatrix::has_one() const {
  for (std::uint64_t w : bits_)
    if (w != 0) return true;
  return false;
}

BinaryMatrix transpose(const BinaryMatrix& m) {
  BinaryMatrix t(m.cols(), m.rows());
  for (int j = 0; j < m.cols(); ++j) t.assign_row_bits(j, m.col_bits(j));
  return t;
}

bool is_basic(const BinaryMatrix& m) {
  for (int i = 0; i < m.rows(); ++i) {
    if (m.row_bits(i) == 0) return false;
    for (int k = i + 1; k < m.rows(); ++k)
      if (m.row_bits(i) == m.row_bits(k)) return false;
  }
  for (int j = 0; j < m.cols(); ++j) {
    std::uint64_t cj = m.col_bits(j);
    if (cj == 0) return false;
    for (int l = j + 1; l < m.cols(); ++l)
      if (cj == m.col_bits(l)) return false;
  }
  return true;
}

namespace {

// One reduction pass over the given axis: drop zero lines and repeats
// (first occurrence kept), restricted to the currently surviving lines of
// the other axis.  Returns true when anything was deleted.
bool reduce_axis(const BinaryMatrix& m, std::vector<int>& lines, const std::vector<int>& other,
                 bool row_axis, std::vector<std::vector<int>>& classes) {
  std::vector<int> kept;
  std::vector<std::vector<int>> kept_classes;
  std::vector<std::uint64_t> kept_content;
  bool changed = false;
  for (std::size_t li = 0; li < lines.size(); ++li) {
    int line = lines[li];
    std::uint64_t content = 0;
    for (std::size_t oi = 0; oi < other.size(); ++oi) {
      bool v = row_axis ? m.get(line, other[oi]) : m.get(other[oi], line);
      content |= static_cast<std::uint64_t>(v) << oi;
    }
    if (content == 0) {
      changed = true;
      continue;
    }
    bool duplicate = false;
    for (std::size_t k = 0; k < kept_content.size(); ++k) {
      if (kept_content[k] == content) {
        // Collapse onto the earlier survivor's class.
        for (int orig : classes[li]) kept_classes[k].push_back(orig);
        duplicate = true;
        changed = true;
        break;
      }
    }
    if (!duplicate) {
      kept.push_back(line);
      kept_content.push_back(content);
      kept_classes.push_back(classes[li]);
    }
  }
  lines = std::move(kept);
  classes = std::move(kept_classes);
  return changed;
}

}  // namespace

KernelResult kernel_with_classes(const BinaryMatrix& m) {
  if (!m.has_one()) throw std::domain_error("empty kernel");
  std::vector<int> rows(static_cast<std::size_t>(m.rows()));
  std::vector<int> cols(static_cast<std::size_t>(m.cols()));
  for (int i = 0; i < m.rows(); ++i) rows[static_cast<std::size_t>(i)] = i;
  for (int j = 0; j < m.cols(); ++j) cols[static_cast<std::size_t>(j)] = j;
  std::vector<std::vector<int>> row_classes, col_classes;
  for (int i : rows) row_classes.push_back({i});
  for (int j : cols) col_classes.push_back({j});

  // Rows, then columns, re-checking rows until nothing changes.
  bool changed = true;
  bool first = true;
  while (changed) {
    changed = reduce_axis(m, rows, cols, true, row_classes);
    changed |= reduce_axis(m, cols, rows, false, col_classes);
    if (!first && !changed) break;
    first = false;
  }

  KernelResult out{BinaryMatrix(static_cast<int>(rows.size()), static_cast<int>(cols.size())),
                   std::move(row_classes), std::move(col_classes)};
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      out.kernel.set(static_cast<int>(i), static_cast<int>(j), m.get(rows[i], cols[j]));
  return out;
}

BinaryMatrix kernel(const BinaryMatrix& m) { return kernel_with_classes(m).kernel; }

namespace {

// Lines of one axis as bit rows (row axis: the rows themselves; column
// axis: the columns, each as a bitmask over row indices).
std::vector<std::uint64_t> axis_lines(const BinaryMatrix& m, Axis axis) {
  std::vector<std::uint64_t> lines;
  if (axis == Axis::kRow) {
    for (int i = 0; i < m.rows(); ++i) lines.push_back(m.row_bits(i));
  } else {
    for (int j = 0; j < m.cols(); ++j) lines.push_back(m.col_bits(j));
  }
  return lines;
}

}  // namespace

std::optional<KSumWitness> find_k_sum_axis(const BinaryMatrix& m, int k, Axis axis) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  std::vector<std::uint64_t> lines = axis_lines(m, axis);
  int count = static_cast<int>(lines.size());
  if (k + 1 > count) return std::nullopt;

  // Entrywise integer sum of 0,1 lines equals another 0,1 line exactly when
  // the summands have pairwise disjoint support and their union is the
  // target.  Enumerate summand index tuples in lexicographic order.
  std::vector<int> pick(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
  while (true) {
    std::uint64_t un = 0;
    int popsum = 0;
    bool disjoint = true;
    for (int idx : pick) {
      std::uint64_t w = lines[static_cast<std::size_t>(idx)];
      if ((un & w) != 0) {
        disjoint = false;
        break;
      }
      un |= w;
      popsum += std::popcount(w);
    }
    if (disjoint && popsum == std::popcount(un)) {
      for (int t = 0; t < count; ++t) {
        bool in_pick = std::find(pick.begin(), pick.end(), t) != pick.end();
        if (!in_pick && lines[static_cast<std::size_t>(t)] == un)
          return KSumWitness{axis, pick, t};
      }
    }
    // Advance to the next combination.
    int pos = k - 1;
    while (pos >= 0 && pick[static_cast<std::size_t>(pos)] == count - k + pos) --pos;
    if (pos < 0) break;
    ++pick[static_cast<std::size_t>(pos)];
    for (int q = pos + 1; q < k; ++q)
      pick[static_cast<std::size_t>(q)] = pick[static_cast<std::size_t>(q - 1)] + 1;
  }
  return std::nullopt;
}

std::optional<KSumWitness> find_k_sum(const BinaryMatrix& m, int k) {
  if (auto w = find_k_sum_axis(m, k, Axis::kRow)) return w;
  return find_k_sum_axis(m, k, Axis::kCol);
}

BinaryMatrix kronecker(const BinaryMatrix& a, const BinaryMatrix& b) {
  long long rn = static_cast<long long>(a.rows()) * b.rows();
  long long rm = static_cast<long long>(a.cols()) * b.cols();
  if (rn > BinaryMatrix::kMaxDim || rm > BinaryMatrix::kMaxDim)
    throw std::length_error("matrix dimension cap (64) exceeded");
  BinaryMatrix out(static_cast<int>(rn), static_cast<int>(rm));
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < b.rows(); ++k) {
      if (!a.row_bits(i)) continue;
      std::uint64_t row = 0;
      for (int j = 0; j < a.cols(); ++j)
        if (a.get(i, j)) row |= b.row_bits(k) << (j * b.cols());
      out.assign_row_bits(i * b.rows() + k, row);
    }
  return out;
}

std::vector<std::uint64_t> row_labels(const BinaryMatrix& m) {
  if (m.cols() > 63) throw std::invalid_argument("row_labels requires at most 63 columns");
  std::vector<std::uint64_t> labels(static_cast<std::size_t>(m.rows()), 0);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (m.get(i, j)) labels[static_cast<std::size_t>(i)] |= std::uint64_t{1} << (m.cols() - 1 - j);
  return labels;
}

BinaryMatrix submatrix(const BinaryMatrix& m, const std::vector<int>& row_idx,
                       const std::vector<int>& col_idx) {
  if (row_idx.empty() || col_idx.empty()) throw std::invalid_argument("empty index list");
  auto check_unique = [](const std::vector<int>& idx, int bound) {
    std::uint64_t seen = 0;
    for (int v : idx) {
      if (v < 0 || v >= bound) throw std::out_of_range("submatrix index out of range");
      std::uint64_t bit = std::uint64_t{1} << v;
      if (seen & bit) throw std::invalid_argument("repeated submatrix index");
      seen |= bit;
    }
  };
  check_unique(row_idx, m.rows());
  check_unique(col_idx, m.cols());
  BinaryMatrix out(static_cast<int>(row_idx.size()), static_cast<int>(col_idx.size()));
  for (std::size_t i = 0; i < row_idx.size(); ++i)
    for (std::size_t j = 0; j < col_idx.size(); ++j)
      out.set(static_cast<int>(i), static_cast<int>(j), m.get(row_idx[i], col_idx[j]));
  return out;
}

}  // namespace matrank
