#include "matrank/canonical.hpp"

#include <algorithm>
#include <cstdio>

namespace matrank {

namespace {

// Branch-and-bound over column orderings for a fixed orientation.  Positions
// are filled left to right (most significant label bit first); at each node
// every row carries the partial label of the chosen prefix.  Sorting the
// partial labels and zero-filling the remaining bits gives a pointwise lower
// bound on the sorted label tuple of every completion, so a node whose bound
// is lex->= the incumbent can be discarded; candidates are visited in
// ascending bound order, letting the loop stop at the first pruned one.
struct ColumnSearch {
  const BinaryMatrix& m;
  int n, width;
  std::vector<std::uint64_t> col_pattern;  // col_bits per column
  std::vector<std::uint64_t> best;         // sorted labels of incumbent
  bool have_best = false;

  explicit ColumnSearch(const BinaryMatrix& mat)
      : m(mat), n(mat.rows()), width(mat.cols()) {
    col_pattern.resize(static_cast<std::size_t>(width));
    for (int j = 0; j < width; ++j) col_pattern[static_cast<std::size_t>(j)] = m.col_bits(j);
  }

  void dfs(std::uint64_t used, const std::vector<std::uint64_t>& partial, int depth) {
    if (depth == width) {
      std::vector<std::uint64_t> key = partial;
      std::sort(key.begin(), key.end());
      if (!have_best || key < best) {
        best = std::move(key);
        have_best = true;
      }
      return;
    }

    struct Child {
      int col;
      std::vector<std::uint64_t> partial;
      std::vector<std::uint64_t> bound;  // sorted partials (shift-free proxy)
    };
    std::vector<Child> children;
    std::vector<std::uint64_t> seen;  // column patterns already branched on
    for (int j = 0; j < width; ++j) {
      if ((used >> j) & 1) continue;
      std::uint64_t pat = col_pattern[static_cast<std::size_t>(j)];
      if (std::find(seen.begin(), seen.end(), pat) != seen.end()) continue;
      seen.push_back(pat);
      Child c;
      c.col = j;
      c.partial.resize(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i)
        c.partial[static_cast<std::size_t>(i)] =
            (partial[static_cast<std::size_t>(i)] << 1) | ((pat >> i) & 1);
      c.bound = c.partial;
      std::sort(c.bound.begin(), c.bound.end());
      children.push_back(std::move(c));
    }
    std::sort(children.begin(), children.end(),
              [](const Child& a, const Child& b) { return a.bound < b.bound; });

    int shift = width - depth - 1;
    for (Child& c : children) {
      if (have_best) {
        bool prunable = true;  // bound-with-zero-fill lex->= best?
        for (int i = 0; i < n; ++i) {
          std::uint64_t lb = c.bound[static_cast<std::size_t>(i)] << shift;
          if (lb < best[static_cast<std::size_t>(i)]) { prunable = false; break; }
          if (lb > best[static_cast<std::size_t>(i)]) break;
        }
        if (prunable) break;  // later children bound even higher
      }
      dfs(used | (std::uint64_t{1} << c.col), c.partial, depth + 1);
    }
  }

  std::vector<std::uint64_t> run() {
    std::vector<std::uint64_t> partial(static_cast<std::size_t>(n), 0);
    dfs(0, partial, 0);
    return best;
  }
};

CanonicalKey canon_oriented(const BinaryMatrix& m) {
  CanonicalKey k;
  k.rows = m.rows();
  k.cols = m.cols();
  k.labels = ColumnSearch(m).run();
  return k;
}

}  // namespace

std::string CanonicalKey::hex() const {
  std::string out;
  auto byte = [&out](unsigned v) {
    char buf[3];
    std::snprintf(buf, sizeof buf, "%02x", v & 0xffu);
    out += buf;
  };
  byte(static_cast<unsigned>(rows));
  byte(static_cast<unsigned>(cols));
  int nbytes = (cols + 7) / 8;
  for (std::uint64_t label : labels)
    for (int b = nbytes - 1; b >= 0; --b) byte(static_cast<unsigned>(label >> (8 * b)));
  return out;
}

CanonicalKey canonical_key(const BinaryMatrix& m) {
  if (m.rows() < m.cols()) return canon_oriented(m);
  if (m.rows() > m.cols()) return canon_oriented(transpose(m));
  CanonicalKey a = canon_oriented(m);
  CanonicalKey b = canon_oriented(transpose(m));
  return a < b ? a : b;
}

std::pair<BinaryMatrix, CanonicalKey> canonical_form(const BinaryMatrix& m) {
  CanonicalKey key = canonical_key(m);
  BinaryMatrix rep(key.rows, key.cols);
  for (int i = 0; i < key.rows; ++i) {
    std::uint64_t label = key.labels[static_cast<std::size_t>(i)];
    std::uint64_t bits = 0;
    for (int j = 0; j < key.cols; ++j)
      if ((label >> (key.cols - 1 - j)) & 1) bits |= std::uint64_t{1} << j;
    rep.assign_row_bits(i, bits);
  }
  return {std::move(rep), std::move(key)};
}

bool are_equivalent(const BinaryMatrix& a, const BinaryMatrix& b) {
  return canonical_key(a) == canonical_key(b);
}

}  // namespace matrank
