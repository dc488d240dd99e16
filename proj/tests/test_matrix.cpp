#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "matrank/matrix.hpp"
#include "matrank/text_io.hpp"
#include "oracles.hpp"

using namespace matrank;

TEST_CASE("construction, accessors, and bit invariants") {
  BinaryMatrix m(3, 5);
  CHECK(m.rows() == 3);
  CHECK(m.cols() == 5);
  CHECK(m.ones_count() == 0);
  CHECK_FALSE(m.has_one());

  m.set(0, 0, true);
  m.set(2, 4, true);
  m.set(1, 2, true);
  m.set(1, 2, false);
  CHECK(m.get(0, 0));
  CHECK(m.get(2, 4));
  CHECK_FALSE(m.get(1, 2));
  CHECK(m.ones_count() == 2);
  CHECK(m.has_one());
  CHECK(m.row_bits(0) == 0b00001);
  CHECK(m.row_bits(2) == 0b10000);
  CHECK(m.col_bits(0) == 0b001);
  CHECK(m.col_bits(4) == 0b100);
  CHECK(m.full_row_mask() == 0b11111);

  // Bits past cols() stay zero through assign_row_bits' masking contract.
  BinaryMatrix k = BinaryMatrix::from_rows({"11", "01"});
  CHECK((k.row_bits(0) & ~k.full_row_mask()) == 0);

  CHECK_THROWS_AS(BinaryMatrix(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(BinaryMatrix(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(BinaryMatrix(65, 2), std::length_error);
  CHECK_THROWS_AS(BinaryMatrix(2, 65), std::length_error);
}

TEST_CASE("from_rows, identity, all_ones") {
  BinaryMatrix m = BinaryMatrix::from_rows({"110", "011"});
  CHECK(m.rows() == 2);
  CHECK(m.cols() == 3);
  CHECK(m.get(0, 0));
  CHECK(m.get(0, 1));
  CHECK_FALSE(m.get(0, 2));
  CHECK_FALSE(m.get(1, 0));

  CHECK(BinaryMatrix::identity(3) ==
        BinaryMatrix::from_rows({"100", "010", "001"}));
  CHECK(BinaryMatrix::all_ones(2, 3) == BinaryMatrix::from_rows({"111", "111"}));

  CHECK_THROWS_AS(BinaryMatrix::from_rows({}), std::invalid_argument);
  CHECK_THROWS_AS(BinaryMatrix::from_rows({"10", "1"}), std::invalid_argument);
  CHECK_THROWS_AS(BinaryMatrix::from_rows({"12"}), std::invalid_argument);
}

TEST_CASE("transpose is an involution and swaps the axes") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 50; ++t) {
    BinaryMatrix m = oracles::random_matrix(rng, 1 + int(rng() % 6), 1 + int(rng() % 6));
    BinaryMatrix tt = transpose(m);
    CHECK(tt.rows() == m.cols());
    CHECK(tt.cols() == m.rows());
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) CHECK(m.get(i, j) == tt.get(j, i));
    CHECK(transpose(tt) == m);
  }
}

TEST_CASE("is_basic matches its definition") {
  CHECK(is_basic(BinaryMatrix::from_rows({"110", "011", "111"})));
  CHECK_FALSE(is_basic(BinaryMatrix::from_rows({"110", "110"})));   // dup rows
  CHECK_FALSE(is_basic(BinaryMatrix::from_rows({"101", "101"})));   // dup rows
  CHECK_FALSE(is_basic(BinaryMatrix::from_rows({"10", "00"})));     // zero row
  CHECK_FALSE(is_basic(BinaryMatrix::from_rows({"10", "10"})));     // dup rows + dup cols
  CHECK_FALSE(is_basic(BinaryMatrix::from_rows({"110", "110", "001"})));
  CHECK_FALSE(is_basic(BinaryMatrix::from_rows({"11", "11"})));
  CHECK(is_basic(BinaryMatrix::from_rows({"10", "01"})));

  // Exhaustive agreement with the from-scratch definition on all 3x3 and 3x4.
  oracles::each_matrix(3, 3, [&](const BinaryMatrix& m) {
    CHECK(is_basic(m) == oracles::basic_by_definition(m));
  });
  oracles::each_matrix(3, 4, [&](const BinaryMatrix& m) {
    CHECK(is_basic(m) == oracles::basic_by_definition(m));
  });
}

TEST_CASE("kernel deletes zero and duplicate lines to a fixed point") {
  // Duplicated row, then a column that becomes duplicate after row removal.
  BinaryMatrix m = BinaryMatrix::from_rows({
      "1100",
      "1100",
      "0011",
      "0000",
  });
  KernelResult kr = kernel_with_classes(m);
  CHECK(kr.kernel == BinaryMatrix::from_rows({"10", "01"}));
  CHECK(kr.row_classes == std::vector<std::vector<int>>{{0, 1}, {2}});
  CHECK(kr.col_classes == std::vector<std::vector<int>>{{0, 1}, {2, 3}});

  // A basic matrix is its own kernel.
  BinaryMatrix b = BinaryMatrix::from_rows({"110", "011", "111"});
  CHECK(kernel(b) == b);

  // Kernel output is always basic, and kernels are idempotent.
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    BinaryMatrix r = oracles::random_matrix(rng, 2 + int(rng() % 5), 2 + int(rng() % 5));
    if (!r.has_one()) continue;
    BinaryMatrix k = kernel(r);
    CHECK(is_basic(k));
    CHECK(kernel(k) == k);
    // Every class member line equals its representative line in m.
    KernelResult kr2 = kernel_with_classes(r);
    for (const auto& cls : kr2.row_classes)
      for (int i : cls) CHECK(r.row_bits(i) == r.row_bits(cls.front()));
    for (const auto& cls : kr2.col_classes)
      for (int j : cls) CHECK(r.col_bits(j) == r.col_bits(cls.front()));
  }

  CHECK_THROWS_AS(kernel(BinaryMatrix(3, 3)), std::domain_error);
  CHECK_THROWS_WITH(kernel(BinaryMatrix(2, 2)), "empty kernel");
}

TEST_CASE("find_k_sum agrees with exhaustive subset scan") {
  std::mt19937_64 rng(23);
  auto check_one = [&](const BinaryMatrix& m, int k) {
    bool want = oracles::brute_k_sum_exists(m, k);
    auto got = find_k_sum(m, k);
    CHECK(got.has_value() == want);
    if (got) {
      const KSumWitness& w = *got;
      CHECK(int(w.summands.size()) == k);
      CHECK(std::is_sorted(w.summands.begin(), w.summands.end()));
      CHECK(std::adjacent_find(w.summands.begin(), w.summands.end()) == w.summands.end());
      CHECK(std::find(w.summands.begin(), w.summands.end(), w.target) == w.summands.end());
      // The witness really holds: entrywise integer sum equals the target.
      const BinaryMatrix mm = w.axis == Axis::kRow ? m : transpose(m);
      const int width = mm.cols();
      for (int j = 0; j < width; ++j) {
        int s = 0;
        for (int i : w.summands) s += mm.get(i, j) ? 1 : 0;
        CHECK(s == (mm.get(w.target, j) ? 1 : 0));
      }
    }
  };

  oracles::each_matrix(3, 3, [&](const BinaryMatrix& m) { check_one(m, 2); });
  for (int t = 0; t < 300; ++t) {
    BinaryMatrix m = oracles::random_matrix(rng, 3 + int(rng() % 4), 3 + int(rng() % 4));
    check_one(m, 2);
    check_one(m, 3);
  }
}

TEST_CASE("find_k_sum scan order: rows before columns, lexicographic summands") {
  // Rows 0+1 = row 2 and also columns 0+1 = column 2 by symmetry; the row
  // witness must win, with the smallest summand tuple and target.
  BinaryMatrix m = BinaryMatrix::from_rows({
      "1100",
      "0011",
      "1111",
      "0000",
  });
  auto w = find_k_sum(m, 2);
  REQUIRE(w.has_value());
  CHECK(w->axis == Axis::kRow);
  CHECK(w->summands == std::vector<int>{0, 1});
  CHECK(w->target == 2);

  // Column-only search on a matrix whose only 2-sum is on rows.
  BinaryMatrix rows_only = BinaryMatrix::from_rows({
      "110",
      "001",
      "111",
  });
  CHECK(find_k_sum(rows_only, 2).has_value());
  CHECK_FALSE(find_k_sum_axis(rows_only, 2, Axis::kCol).has_value());
  CHECK(find_k_sum_axis(rows_only, 2, Axis::kRow).has_value());

  // Ties among row witnesses resolve to the lexicographically first tuple.
  BinaryMatrix tie = BinaryMatrix::from_rows({
      "1000",
      "0100",
      "1100",
      "0010",
      "0110",
  });
  auto tw = find_k_sum(tie, 2);
  REQUIRE(tw.has_value());
  CHECK(tw->axis == Axis::kRow);
  CHECK(tw->summands == std::vector<int>{0, 1});
  CHECK(tw->target == 2);
}

TEST_CASE("kronecker product layout and bounds") {
  BinaryMatrix a = BinaryMatrix::from_rows({"10", "11"});
  BinaryMatrix b = BinaryMatrix::from_rows({"01", "10"});
  BinaryMatrix k = kronecker(a, b);
  CHECK(k == BinaryMatrix::from_rows({
                 "0100",
                 "1000",
                 "0101",
                 "1010",
             }));
  // (i,k),(j,l) indexing: entry = a(i,j) * b(k,l).
  for (int i = 0; i < 2; ++i)
    for (int kk = 0; kk < 2; ++kk)
      for (int j = 0; j < 2; ++j)
        for (int l = 0; l < 2; ++l)
          CHECK(k.get(i * 2 + kk, j * 2 + l) == (a.get(i, j) && b.get(kk, l)));

  CHECK_THROWS_AS(kronecker(BinaryMatrix::all_ones(9, 2), BinaryMatrix::all_ones(8, 2)),
                  std::length_error);
}

TEST_CASE("row_labels reads rows with column 1 most significant") {
  BinaryMatrix m = BinaryMatrix::from_rows({"110", "011", "100"});
  CHECK(row_labels(m) == std::vector<std::uint64_t>{6, 3, 4});
  CHECK(row_labels(BinaryMatrix::identity(2)) == std::vector<std::uint64_t>{2, 1});
}

TEST_CASE("submatrix restriction preserves list order and validates input") {
  BinaryMatrix m = BinaryMatrix::from_rows({
      "1010",
      "0110",
      "0011",
  });
  CHECK(submatrix(m, {2, 0}, {1, 3}) == BinaryMatrix::from_rows({"01", "00"}));
  CHECK(submatrix(m, {0, 1, 2}, {0, 1, 2, 3}) == m);
  CHECK_THROWS_AS(submatrix(m, {0, 3}, {0}), std::out_of_range);
  CHECK_THROWS_AS(submatrix(m, {0}, {-1}), std::out_of_range);
  CHECK_THROWS_AS(submatrix(m, {}, {0}), std::invalid_argument);
  CHECK_THROWS_AS(submatrix(m, {0, 0}, {1}), std::invalid_argument);
}

TEST_CASE("matrix text round trip and parse errors") {
  BinaryMatrix m = BinaryMatrix::from_rows({"1010", "0111"});
  std::string text = matrix_to_string(m);
  CHECK(text == "2 4\n1010\n0111\n");
  CHECK(parse_matrix_string(text) == m);

  // Whitespace between entries is tolerated.
  CHECK(parse_matrix_string("2 2\n1 0\n0 1\n") == BinaryMatrix::identity(2));

  // Round trip over random matrices.
  std::mt19937_64 rng(31);
  for (int t = 0; t < 100; ++t) {
    BinaryMatrix r = oracles::random_matrix(rng, 1 + int(rng() % 8), 1 + int(rng() % 8));
    CHECK(parse_matrix_string(matrix_to_string(r)) == r);
  }

  auto pos = [](const std::string& text) {
    try {
      parse_matrix_string(text);
    } catch (const ParseError& e) {
      return std::pair<int, int>{e.line, e.column};
    }
    return std::pair<int, int>{0, 0};
  };
  CHECK(pos("") == std::pair<int, int>{1, 1});             // missing header
  CHECK(pos("2\n10\n01\n") == std::pair<int, int>{1, 2});  // truncated header
  CHECK(pos("2 2\n10\n0") == std::pair<int, int>{3, 2});   // short row
  CHECK(pos("2 2\n10\n02\n") == std::pair<int, int>{3, 2});  // bad character
  CHECK(pos("1 2\n101\n") == std::pair<int, int>{2, 3});     // long row
  CHECK(pos("0 2\n") == std::pair<int, int>{1, 1});          // bad dimension
  CHECK(pos("2 65\n") == std::pair<int, int>{1, 3});         // over the cap

  // Exactly one matrix is consumed; later stream content is left alone.
  CHECK(parse_matrix_string("1 2\n10\nleftover") == BinaryMatrix::from_rows({"10"}));
}
