#include "matrank/rank_real.hpp"

#include <algorithm>
#include <cstdint>

namespace matrank {

namespace {

// Fraction-free elimination over T (int64 or mpz).  Intermediate entries are
// minors of the input, so for 0,1 matrices with min(n,m) <= 16 the Hadamard
// bound keeps every product far below the int64 limit; wider inputs use mpz.
template <typename T>
int bareiss_rank(const BinaryMatrix& m) {
  int n = m.rows(), w = m.cols();
  std::vector<std::vector<T>> a(static_cast<std::size_t>(n), std::vector<T>(static_cast<std::size_t>(w)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < w; ++j) a[i][j] = m.get(i, j) ? 1 : 0;

  T prev = 1;
  int rank = 0;
  for (int c = 0; c < w && rank < n; ++c) {
    int p = -1;
    for (int i = rank; i < n; ++i)
      if (a[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(a[static_cast<std::size_t>(p)], a[static_cast<std::size_t>(rank)]);
    for (int i = rank + 1; i < n; ++i) {
      for (int j = c + 1; j < w; ++j)
        a[i][j] = (a[rank][c] * a[i][j] - a[i][c] * a[rank][j]) / prev;
      a[i][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

struct BasisVector {
  std::vector<Rational> vec;     // reduced: 1 at own pivot, 0 at other pivots
  int pivot;                     // first nonzero coordinate
  std::vector<Rational> coeffs;  // expression in terms of original lines
};

// Reduced basis of the span of `lines` (each a 0,1 bit mask of width w),
// built from the first maximal independent subset in index order, with
// coefficient tracking against the original lines.
std::vector<BasisVector> reduced_basis(const std::vector<std::uint64_t>& lines, int w) {
  std::vector<BasisVector> basis;
  std::size_t count = lines.size();
  for (std::size_t r = 0; r < count; ++r) {
    std::vector<Rational> vec(static_cast<std::size_t>(w));
    for (int j = 0; j < w; ++j) vec[static_cast<std::size_t>(j)] = (lines[r] >> j) & 1 ? 1 : 0;
    std::vector<Rational> coeffs(count);
    coeffs[r] = 1;
    for (const BasisVector& b : basis) {
      Rational g = vec[static_cast<std::size_t>(b.pivot)];
      if (g == 0) continue;
      for (int j = 0; j < w; ++j) vec[static_cast<std::size_t>(j)] -= g * b.vec[static_cast<std::size_t>(j)];
      for (std::size_t t = 0; t < count; ++t) coeffs[t] -= g * b.coeffs[t];
    }
    int pivot = -1;
    for (int j = 0; j < w; ++j)
      if (vec[static_cast<std::size_t>(j)] != 0) {
        pivot = j;
        break;
      }
    if (pivot < 0) continue;  // dependent line; contributes no basis vector
    Rational inv = vec[static_cast<std::size_t>(pivot)];
    for (int j = 0; j < w; ++j) vec[static_cast<std::size_t>(j)] /= inv;
    for (std::size_t t = 0; t < count; ++t) coeffs[t] /= inv;
    // Keep the basis fully reduced: clear the new pivot everywhere else.
    for (BasisVector& b : basis) {
      Rational g = b.vec[static_cast<std::size_t>(pivot)];
      if (g == 0) continue;
      for (int j = 0; j < w; ++j) b.vec[static_cast<std::size_t>(j)] -= g * vec[static_cast<std::size_t>(j)];
      for (std::size_t t = 0; t < count; ++t) b.coeffs[t] -= g * coeffs[t];
    }
    basis.push_back(BasisVector{std::move(vec), pivot, std::move(coeffs)});
  }
  return basis;
}

std::vector<std::uint64_t> lines_of(const BinaryMatrix& m, Axis axis) {
  std::vector<std::uint64_t> lines;
  if (axis == Axis::kRow)
    for (int i = 0; i < m.rows(); ++i) lines.push_back(m.row_bits(i));
  else
    for (int j = 0; j < m.cols(); ++j) lines.push_back(m.col_bits(j));
  return lines;
}

std::optional<SpanCertificate> span_solve(const std::vector<std::uint64_t>& lines, int w,
                                          std::uint64_t v) {
  std::vector<BasisVector> basis = reduced_basis(lines, w);
  std::vector<Rational> resid(static_cast<std::size_t>(w));
  for (int j = 0; j < w; ++j) resid[static_cast<std::size_t>(j)] = (v >> j) & 1 ? 1 : 0;
  std::vector<Rational> coeffs(lines.size());
  for (const BasisVector& b : basis) {
    Rational g = resid[static_cast<std::size_t>(b.pivot)];
    if (g == 0) continue;
    for (int j = 0; j < w; ++j) resid[static_cast<std::size_t>(j)] -= g * b.vec[static_cast<std::size_t>(j)];
    for (std::size_t t = 0; t < lines.size(); ++t) coeffs[t] += g * b.coeffs[t];
  }
  for (int j = 0; j < w; ++j)
    if (resid[static_cast<std::size_t>(j)] != 0) return std::nullopt;
  return SpanCertificate{std::move(coeffs)};
}

}  // namespace

int real_rank(const BinaryMatrix& m) {
  if (std::min(m.rows(), m.cols()) <= 16) return bareiss_rank<std::int64_t>(m);
  return bareiss_rank<mpz_class>(m);
}

std::optional<SpanCertificate> in_row_span(const BinaryMatrix& m, std::uint64_t v) {
  if (m.cols() < 64 && (v >> m.cols()) != 0)
    throw std::invalid_argument("target vector has bits beyond the matrix width");
  return span_solve(lines_of(m, Axis::kRow), m.cols(), v);
}

std::optional<SpanCertificate> in_col_span(const BinaryMatrix& m, std::uint64_t v) {
  if (m.rows() < 64 && (v >> m.rows()) != 0)
    throw std::invalid_argument("target vector has bits beyond the matrix height");
  return span_solve(lines_of(m, Axis::kCol), m.rows(), v);
}

std::vector<std::uint64_t> span_zero_one_vectors(const BinaryMatrix& m, Axis axis) {
  int w = axis == Axis::kRow ? m.cols() : m.rows();
  std::vector<BasisVector> basis = reduced_basis(lines_of(m, axis), w);
  int d = static_cast<int>(basis.size());
  std::vector<std::uint64_t> out;
  // A span vector is fixed by its pivot-coordinate values: since the basis
  // is reduced, the combination with pivot pattern T is exactly the sum of
  // the basis vectors selected by T.
  for (std::uint64_t t = 0; t < (std::uint64_t{1} << d); ++t) {
    std::vector<Rational> sum(static_cast<std::size_t>(w));
    for (int b = 0; b < d; ++b)
      if ((t >> b) & 1)
        for (int j = 0; j < w; ++j)
          sum[static_cast<std::size_t>(j)] += basis[static_cast<std::size_t>(b)].vec[static_cast<std::size_t>(j)];
    std::uint64_t mask = 0;
    bool zero_one = true;
    for (int j = 0; j < w && zero_one; ++j) {
      if (sum[static_cast<std::size_t>(j)] == 1)
        mask |= std::uint64_t{1} << j;
      else if (sum[static_cast<std::size_t>(j)] != 0)
        zero_one = false;
    }
    if (zero_one) out.push_back(mask);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace matrank
