#include "matrank/text_io.hpp"

#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>

namespace matrank {

namespace {

// Reads the header "n m".  Extra tokens or junk on the line are errors.
std::pair<int, int> parse_header(const std::string& line) {
  std::size_t pos = 0;
  auto skip_blanks = [&] {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
  };
  auto read_int = [&](const char* what) {
    skip_blanks();
    std::size_t start = pos;
    while (pos < line.size() && std::isdigit(static_cast<unsigned char>(line[pos]))) ++pos;
    if (pos == start) throw ParseError(1, static_cast<int>(pos) + 1, std::string("expected ") + what);
    long v = std::stol(line.substr(start, pos - start));
    if (v < 1 || v > BinaryMatrix::kMaxDim)
      throw ParseError(1, static_cast<int>(start) + 1, "dimension out of range 1..64");
    return static_cast<int>(v);
  };
  int n = read_int("row count");
  int m = read_int("column count");
  skip_blanks();
  if (pos != line.size()) throw ParseError(1, static_cast<int>(pos) + 1, "unexpected trailing text in header");
  return {n, m};
}

}  // namespace

BinaryMatrix parse_matrix(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError(1, 1, "missing header line");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  auto [n, m] = parse_header(line);

  BinaryMatrix out(n, m);
  for (int i = 0; i < n; ++i) {
    if (!std::getline(in, line)) throw ParseError(i + 2, 1, "missing matrix row");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    int j = 0;
    for (std::size_t c = 0; c < line.size(); ++c) {
      char ch = line[c];
      if (ch == ' ' || ch == '\t') continue;
      if (ch != '0' && ch != '1')
        throw ParseError(i + 2, static_cast<int>(c) + 1, "expected 0 or 1");
      if (j >= m) throw ParseError(i + 2, static_cast<int>(c) + 1, "row longer than declared width");
      out.set(i, j, ch == '1');
      ++j;
    }
    if (j < m) throw ParseError(i + 2, static_cast<int>(line.size()) + 1, "row shorter than declared width");
  }
  return out;
}

BinaryMatrix parse_matrix_string(const std::string& text) {
  std::istringstream in(text);
  return parse_matrix(in);
}

void emit_matrix(std::ostream& out, const BinaryMatrix& m) {
  out << m.rows() << ' ' << m.cols() << '\n';
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) out << (m.get(i, j) ? '1' : '0');
    out << '\n';
  }
}

std::string matrix_to_string(const BinaryMatrix& m) {
  std::ostringstream out;
  emit_matrix(out, m);
  return out.str();
}

}  // namespace matrank
