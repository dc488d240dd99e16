#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

#include "matrank/matrix.hpp"

namespace matrank {

// Exact rational scalar in canonical form: reduced fraction with positive
// denominator (mpq_class canonicalizes on construction and arithmetic).
using Rational = mpq_class;

// Rank over the rationals, computed by fraction-free (integer-preserving)
// elimination with the pivot taken as the first nonzero entry in scan order.
// Exact for every input within the dimension cap.
int real_rank(const BinaryMatrix& m);

// Coefficients expressing a target vector as a linear combination of the
// lines of a matrix, one coefficient per line.  When the lines are
// independent this is the unique solution; otherwise the combination is
// taken over the reduced basis formed by the first maximal independent set
// of lines in index order, and every dependent line gets coefficient 0.
struct SpanCertificate {
  std::vector<Rational> coefficients;
};

// v is a bit mask over columns (bit j = coordinate j).
std::optional<SpanCertificate> in_row_span(const BinaryMatrix& m, std::uint64_t v);
// v is a bit mask over rows (bit i = coordinate i).
std::optional<SpanCertificate> in_col_span(const BinaryMatrix& m, std::uint64_t v);

// All 0,1 vectors lying in the row (column) space of m, as bit masks,
// sorted ascending.  Includes the zero vector.  A 0,1 vector of the span is
// determined by its values at the pivot coordinates of the reduced basis,
// so the enumeration walks the 2^rank pivot patterns.
std::vector<std::uint64_t> span_zero_one_vectors(const BinaryMatrix& m, Axis axis);

}  // namespace matrank
