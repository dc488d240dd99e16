#include "matrank/constructions.hpp"

#include <stdexcept>

#include "matrank/text_io.hpp"

namespace matrank {

BinaryMatrix circulant_C(int n) {
  if (n < 4 || n % 2 != 0) throw std::invalid_argument("circulant_C needs even n >= 4");
  int k = n / 2;
  BinaryMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < k; ++j) m.set(i, (i + j) % n, true);
  return m;
}

BinaryMatrix odd_gap_matrix(int k) {
  if (k < 3) throw std::invalid_argument("odd_gap_matrix needs k >= 3");
  int n = 2 * k + 1;
  BinaryMatrix c = circulant_C(2 * k);
  BinaryMatrix m(n, n);
  for (int i = 0; i < 2 * k; ++i)
    for (int j = 0; j < 2 * k; ++j)
      if (c.get(i, j)) m.set(i, j, true);
  // Appended row: rows 1 and k+1 of the circulant have disjoint supports and
  // sum to the all-ones row.
  for (int j = 0; j < 2 * k; ++j) m.set(2 * k, j, true);
  // Appended column from the last three columns of the augmented matrix.
  for (int i = 0; i < n; ++i) {
    int v = m.get(i, 2 * k - 1) - m.get(i, 2 * k - 2) + m.get(i, 2 * k - 3);
    if (v != 0 && v != 1) throw std::logic_error("odd_gap_matrix column not 0,1");
    if (v) m.set(i, 2 * k, true);
  }
  return m;
}

BinaryMatrix diag_complement_D(int n) {
  if (n < 3) throw std::invalid_argument("diag_complement_D needs n >= 3");
  BinaryMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) m.set(i, j, true);
  return m;
}

BinaryMatrix block_gap_matrix(int d) {
  if (d < 3) throw std::invalid_argument("block_gap_matrix needs d >= 3");
  BinaryMatrix m(d, d);
  int off = d - 3;
  for (int i = 0; i < off; ++i) m.set(i, i, true);
  const char* block[3] = {"110", "011", "111"};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (block[i][j] == '1') m.set(off + i, off + j, true);
  return m;
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

namespace {

CatalogEntry make_entry(std::string name, std::vector<std::string> rows,
                        ExpectedProfile expected, std::uint64_t checksum) {
  return CatalogEntry{std::move(name), BinaryMatrix::from_rows(rows), expected,
                      checksum};
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> v;
  v.push_back(make_entry("fig2.A1", {"100", "010", "001"}, {3, 3, 3, 3}, 0xb8b49f9651dc540eull));
  v.push_back(make_entry("fig2.A2", {"100", "010", "011"}, {3, 3, 3, 3}, 0xb011e0964cfa0085ull));
  v.push_back(make_entry("fig2.A3", {"100", "010", "111"}, {3, 3, 3, 3}, 0x0d0d7a8d6447690cull));
  v.push_back(make_entry("fig2.A4", {"100", "110", "011"}, {3, 3, 3, 3}, 0xa9791a8db869b04cull));
  v.push_back(make_entry("fig2.A5", {"100", "110", "111"}, {3, 3, 3, 3}, 0x4c7d8096a11c47c5ull));
  v.push_back(make_entry("fig2.A6", {"110", "011", "101"}, {3, 3, 3, 3}, 0x0d4d82fd1166e851ull));
  v.push_back(make_entry("fig2.A7", {"110", "011", "111"}, {3, 3, 2, 2}, 0x165cf1fd16a585caull));
  v.push_back(make_entry("fig3.A1",
                         {"110010", "011011", "001101", "110101", "001010", "101110"},
                         {4, 5, 5, 5}, 0xf4e9d5cad986a8a5ull));
  v.push_back(make_entry("fig3.A2",
                         {"111001", "010101", "001001", "000110", "101010", "110110"},
                         {4, 5, 5, 5}, 0xfbf7f5623f7efd5bull));
  v.push_back(make_entry("fig3.A3",
                         {"111000", "011100", "001110", "000111", "100011", "010101"},
                         {4, 6, 6, 5}, 0x893b1624cc1da4ddull));
  v.push_back(make_entry("c4", {"1100", "0110", "0011", "1001"}, {3, 4, 4, 4}, 0x44784ca194a62763ull));
  v.push_back(make_entry(
      "c6", {"111000", "011100", "001110", "000111", "100011", "110001"},
      {4, 6, 6, 6}, 0x8abc6c0151b2e46bull));
  v.push_back(make_entry("lemma17.m1",
                         {"0111001", "1011010", "1101100", "1111000", "0011011",
                          "0101101", "1001110", "0001111"},
                         {4, -1, -1, -1}, 0x8d298bda44a782c4ull));
  v.push_back(make_entry("lemma17.m2",
                         {"0111010", "1011100", "1101001", "1111101", "0110101",
                          "1001000", "0010100", "0100001"},
                         {4, -1, -1, -1}, 0xfaf51b73cd46e7d2ull));
  v.push_back(make_entry("thm3.M1", {"1001", "0101", "0110", "1010"}, {3, 4, 4, 4}, 0x61d27e1371915607ull));
  v.push_back(make_entry("thm3.M2", {"1001", "0101", "0111", "1011"}, {3, 3, 3, 3}, 0xed9882fb4a583e25ull));
  return v;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

const CatalogEntry* catalog_find(std::string_view name) {
  std::string wanted(name);
  if (wanted == "lemma14.A1") wanted = "fig3.A1";
  if (wanted == "lemma14.A2") wanted = "fig3.A2";
  if (wanted == "lemma14.A3") wanted = "fig3.A3";
  for (const CatalogEntry& e : catalog())
    if (e.name == wanted) return &e;
  return nullptr;
}

}  // namespace matrank
