#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "matrank/matrix.hpp"

namespace matrank {

// Parse failure with 1-based position of the offending input.
struct ParseError : std::runtime_error {
  int line;
  int column;
  ParseError(int line_, int column_, const std::string& what_)
      : std::runtime_error("line " + std::to_string(line_) + ", column " +
                           std::to_string(column_) + ": " + what_),
        line(line_),
        column(column_) {}
};

// Text format: a header line "n m", then n lines of m characters over {0,1}.
// Whitespace between entry characters is tolerated on input.
BinaryMatrix parse_matrix(std::istream& in);
BinaryMatrix parse_matrix_string(const std::string& text);

// Emits the dense form: header, then one unspaced row per line, with a
// trailing newline.
void emit_matrix(std::ostream& out, const BinaryMatrix& m);
std::string matrix_to_string(const BinaryMatrix& m);

}  // namespace matrank
