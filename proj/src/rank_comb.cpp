#include "matrank/rank_comb.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "matrank/rank_real.hpp"

namespace matrank {

namespace {

// ---------------------------------------------------------------------------
// Cell regions: arbitrary sets of matrix positions, one column mask per row.
// ---------------------------------------------------------------------------

using Region = std::vector<std::uint64_t>;

Region ones_region(const BinaryMatrix& m) {
  Region s(static_cast<std::size_t>(m.rows()));
  for (int i = 0; i < m.rows(); ++i) s[static_cast<std::size_t>(i)] = m.row_bits(i);
  return s;
}

bool region_empty(const Region& s) {
  for (std::uint64_t w : s)
    if (w) return false;
  return true;
}

// Row-major first cell, as (row, col).  Requires a nonempty region.
std::pair<int, int> region_first(const Region& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i]) return {static_cast<int>(i), std::countr_zero(s[i])};
  return {-1, -1};
}

void region_remove(Region& s, const Rectangle& r) {
  std::uint64_t rows = r.row_set;
  while (rows) {
    int i = std::countr_zero(rows);
    rows &= rows - 1;
    s[static_cast<std::size_t>(i)] &= ~r.col_set;
  }
}

// Greedy isolated set restricted to the region, scanned row-major.  Every
// rectangle holds at most one isolated cell, so the size lower-bounds both
// the partition and the cover number of the region.
int fooling_bound(const BinaryMatrix& m, const Region& s) {
  std::vector<std::pair<int, int>> picked;
  for (std::size_t i = 0; i < s.size(); ++i) {
    std::uint64_t w = s[i];
    while (w) {
      int j = std::countr_zero(w);
      w &= w - 1;
      bool ok = true;
      for (auto [k, l] : picked) {
        if (static_cast<int>(i) == k || j == l ||
            (m.get(static_cast<int>(i), l) && m.get(k, j))) {
          ok = false;
          break;
        }
      }
      if (ok) picked.emplace_back(static_cast<int>(i), j);
    }
  }
  return static_cast<int>(picked.size());
}

void charge(Budget* budget) {
  if (budget) budget->charge();
}

// Every rectangle of the region that contains the pivot cell (pi, pj),
// sorted ascending by (row_set, col_set).  Branching over all of them is
// exhaustive for minimum partitions: restricting the branch set to maximal
// rectangles of the region is NOT sound — e.g. for
//   1010
//   1111
//   0011
//   1100
// the unique-size-3 partitions use the non-maximal piece {row 1} x {cols
// 1,3}, while every maximal-piece choice at the first cell forces 4 parts.
std::vector<Rectangle> region_rects_at(const Region& s, int pi, int pj, Budget* budget) {
  std::vector<Rectangle> out;
  std::uint64_t prow = s[static_cast<std::size_t>(pi)];
  std::uint64_t col_rest = prow & ~(std::uint64_t{1} << pj);
  std::uint64_t csub = col_rest;
  while (true) {
    std::uint64_t cset = csub | (std::uint64_t{1} << pj);
    std::vector<int> eligible;  // rows other than pi whose cells cover cset
    for (std::size_t i = 0; i < s.size(); ++i)
      if (static_cast<int>(i) != pi && (s[i] & cset) == cset)
        eligible.push_back(static_cast<int>(i));
    int e = static_cast<int>(eligible.size());
    for (std::uint64_t rsub = 0; rsub < (std::uint64_t{1} << e); ++rsub) {
      charge(budget);
      std::uint64_t rset = std::uint64_t{1} << pi;
      for (int t = 0; t < e; ++t)
        if ((rsub >> t) & 1) rset |= std::uint64_t{1} << eligible[static_cast<std::size_t>(t)];
      out.push_back(Rectangle{rset, cset});
    }
    if (csub == 0) break;
    csub = (csub - 1) & col_rest;
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Minimum rectangle partition (binary rank).
// ---------------------------------------------------------------------------

struct PartitionSolver {
  const BinaryMatrix& m;
  Budget* budget;
  int best;
  std::vector<Rectangle> best_cert;

  void optimize(Region& s, std::vector<Rectangle>& cur) {
    charge(budget);
    if (region_empty(s)) {
      if (static_cast<int>(cur.size()) < best) {
        best = static_cast<int>(cur.size());
        best_cert = cur;
      }
      return;
    }
    if (static_cast<int>(cur.size()) + fooling_bound(m, s) >= best) return;
    auto [pi, pj] = region_first(s);
    for (const Rectangle& r : region_rects_at(s, pi, pj, budget)) {
      Region next = s;
      region_remove(next, r);
      cur.push_back(r);
      optimize(next, cur);
      cur.pop_back();
    }
  }

  bool extract(Region& s, int remaining, std::vector<Rectangle>& cur) {
    charge(budget);
    if (region_empty(s)) return true;
    if (fooling_bound(m, s) > remaining) return false;
    auto [pi, pj] = region_first(s);
    for (const Rectangle& r : region_rects_at(s, pi, pj, budget)) {
      Region next = s;
      region_remove(next, r);
      cur.push_back(r);
      if (extract(next, remaining - 1, cur)) return true;
      cur.pop_back();
    }
    return false;
  }
};

// ---------------------------------------------------------------------------
// Minimum rectangle cover (Boolean rank).
// ---------------------------------------------------------------------------

struct CoverSolver {
  const BinaryMatrix& m;
  Budget* budget;
  std::vector<Rectangle> pool;  // maximal rectangles, ascending
  int best;
  std::vector<Rectangle> best_cert;

  std::vector<int> rects_at(int i, int j) const {
    std::vector<int> out;
    for (std::size_t r = 0; r < pool.size(); ++r)
      if (((pool[r].row_set >> i) & 1) && ((pool[r].col_set >> j) & 1))
        out.push_back(static_cast<int>(r));
    return out;
  }

  void optimize(Region& s, std::vector<Rectangle>& cur) {
    charge(budget);
    if (region_empty(s)) {
      if (static_cast<int>(cur.size()) < best) {
        best = static_cast<int>(cur.size());
        best_cert = cur;
      }
      return;
    }
    if (static_cast<int>(cur.size()) + fooling_bound(m, s) >= best) return;
    auto [pi, pj] = region_first(s);
    for (int idx : rects_at(pi, pj)) {
      Region next = s;
      region_remove(next, pool[static_cast<std::size_t>(idx)]);
      cur.push_back(pool[static_cast<std::size_t>(idx)]);
      optimize(next, cur);
      cur.pop_back();
    }
  }

  bool extract(Region& s, int remaining, std::vector<Rectangle>& cur) {
    charge(budget);
    if (region_empty(s)) return true;
    if (fooling_bound(m, s) > remaining) return false;
    auto [pi, pj] = region_first(s);
    for (int idx : rects_at(pi, pj)) {
      Region next = s;
      region_remove(next, pool[static_cast<std::size_t>(idx)]);
      cur.push_back(pool[static_cast<std::size_t>(idx)]);
      if (extract(next, remaining - 1, cur)) return true;
      cur.pop_back();
    }
    return false;
  }
};

// Greedy cover for the initial upper bound: repeatedly take the rectangle
// covering the most still-uncovered cells (ties to the smaller index).
std::vector<Rectangle> greedy_cover(const std::vector<Rectangle>& pool, Region s) {
  std::vector<Rectangle> cover;
  while (!region_empty(s)) {
    int best_idx = -1, best_gain = 0;
    for (std::size_t r = 0; r < pool.size(); ++r) {
      int gain = 0;
      std::uint64_t rows = pool[r].row_set;
      while (rows) {
        int i = std::countr_zero(rows);
        rows &= rows - 1;
        gain += std::popcount(s[static_cast<std::size_t>(i)] & pool[r].col_set);
      }
      if (gain > best_gain) {
        best_gain = gain;
        best_idx = static_cast<int>(r);
      }
    }
    cover.push_back(pool[static_cast<std::size_t>(best_idx)]);
    region_remove(s, pool[static_cast<std::size_t>(best_idx)]);
  }
  return cover;
}

// ---------------------------------------------------------------------------
// Maximum isolated set (branch-and-bound maximum independent set).
// ---------------------------------------------------------------------------

struct IsoGraph {
  std::vector<std::pair<int, int>> cells;       // row-major
  std::vector<std::vector<std::uint64_t>> adj;  // conflict adjacency, bit blocks
  int blocks;

  bool adjacent(int a, int b) const {
    return (adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b >> 6)] >>
            (b & 63)) & 1;
  }
};

IsoGraph build_iso_graph(const BinaryMatrix& m) {
  IsoGraph g;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (m.get(i, j)) g.cells.emplace_back(i, j);
  int k = static_cast<int>(g.cells.size());
  g.blocks = (k + 63) / 64;
  g.adj.assign(static_cast<std::size_t>(k),
               std::vector<std::uint64_t>(static_cast<std::size_t>(g.blocks), 0));
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b) {
      auto [i, j] = g.cells[static_cast<std::size_t>(a)];
      auto [p, q] = g.cells[static_cast<std::size_t>(b)];
      bool conflict = i == p || j == q || (m.get(i, q) && m.get(p, j));
      if (conflict) {
        g.adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b >> 6)] |=
            std::uint64_t{1} << (b & 63);
        g.adj[static_cast<std::size_t>(b)][static_cast<std::size_t>(a >> 6)] |=
            std::uint64_t{1} << (a & 63);
      }
    }
  return g;
}

using VertSet = std::vector<std::uint64_t>;

bool vs_empty(const VertSet& v) {
  for (std::uint64_t w : v)
    if (w) return false;
  return true;
}

int vs_first(const VertSet& v) {
  for (std::size_t b = 0; b < v.size(); ++b)
    if (v[b]) return static_cast<int>(b) * 64 + std::countr_zero(v[b]);
  return -1;
}

void vs_clear(VertSet& v, int x) { v[static_cast<std::size_t>(x >> 6)] &= ~(std::uint64_t{1} << (x & 63)); }

bool vs_test(const VertSet& v, int x) {
  return (v[static_cast<std::size_t>(x >> 6)] >> (x & 63)) & 1;
}

struct IsoSolver {
  const IsoGraph& g;
  Budget* budget;
  int best = 0;
  std::vector<int> best_set;

  // Greedy cover of the candidate set by conflict cliques; an isolated set
  // meets each clique at most once, so the clique count is an upper bound.
  int clique_cover_bound(const VertSet& cand) const {
    std::vector<VertSet> clique_common;  // vertices conflicting with every member
    int cliques = 0;
    VertSet rest = cand;
    while (!vs_empty(rest)) {
      int v = vs_first(rest);
      vs_clear(rest, v);
      bool placed = false;
      for (VertSet& common : clique_common) {
        if (vs_test(common, v)) {
          for (std::size_t b = 0; b < common.size(); ++b)
            common[b] &= g.adj[static_cast<std::size_t>(v)][b];
          placed = true;
          break;
        }
      }
      if (!placed) {
        clique_common.push_back(g.adj[static_cast<std::size_t>(v)]);
        ++cliques;
      }
    }
    return cliques;
  }

  void expand(VertSet cand, std::vector<int>& cur) {
    charge(budget);
    if (vs_empty(cand)) {
      if (static_cast<int>(cur.size()) > best) {
        best = static_cast<int>(cur.size());
        best_set = cur;
      }
      return;
    }
    if (static_cast<int>(cur.size()) + clique_cover_bound(cand) <= best) return;
    int v = vs_first(cand);
    // Include v first: independent neighbors only.
    VertSet incl = cand;
    vs_clear(incl, v);
    for (std::size_t b = 0; b < incl.size(); ++b)
      incl[b] &= ~g.adj[static_cast<std::size_t>(v)][b];
    cur.push_back(v);
    expand(std::move(incl), cur);
    cur.pop_back();
    vs_clear(cand, v);
    expand(std::move(cand), cur);
  }

  // Is there an independent set of size >= want inside cand?
  bool feasible(VertSet cand, int have, int want) {
    charge(budget);
    if (have >= want) return true;
    if (vs_empty(cand)) return false;
    if (have + clique_cover_bound(cand) < want) return false;
    int v = vs_first(cand);
    VertSet incl = cand;
    vs_clear(incl, v);
    for (std::size_t b = 0; b < incl.size(); ++b)
      incl[b] &= ~g.adj[static_cast<std::size_t>(v)][b];
    if (feasible(std::move(incl), have + 1, want)) return true;
    vs_clear(cand, v);
    return feasible(std::move(cand), have, want);
  }
};

Rectangle lift_rect(const Rectangle& r, const std::vector<std::vector<int>>& row_classes,
                    const std::vector<std::vector<int>>& col_classes) {
  Rectangle out;
  std::uint64_t rows = r.row_set;
  while (rows) {
    int t = std::countr_zero(rows);
    rows &= rows - 1;
    for (int orig : row_classes[static_cast<std::size_t>(t)]) out.row_set |= std::uint64_t{1} << orig;
  }
  std::uint64_t cols = r.col_set;
  while (cols) {
    int t = std::countr_zero(cols);
    cols &= cols - 1;
    for (int orig : col_classes[static_cast<std::size_t>(t)]) out.col_set |= std::uint64_t{1} << orig;
  }
  return out;
}

bool rect_ok(const BinaryMatrix& m, const Rectangle& r) {
  if (r.row_set == 0 || r.col_set == 0) return false;
  if (m.rows() < 64 && (r.row_set >> m.rows()) != 0) return false;
  if (m.cols() < 64 && (r.col_set >> m.cols()) != 0) return false;
  std::uint64_t rows = r.row_set;
  while (rows) {
    int i = std::countr_zero(rows);
    rows &= rows - 1;
    if ((m.row_bits(i) & r.col_set) != r.col_set) return false;
  }
  return true;
}

}  // namespace

std::vector<Rectangle> maximal_rectangles(const BinaryMatrix& m) {
  if (!m.has_one()) throw std::domain_error("matrix has no 1-entry");
  // Column sets of maximal rectangles are exactly the nonzero intersections
  // of nonempty row subsets; each is reachable by intersecting one row at a
  // time, and its row set closes to "all rows containing it".
  std::vector<std::uint64_t> closed;
  for (int i = 0; i < m.rows(); ++i) {
    std::uint64_t r = m.row_bits(i);
    if (r && std::find(closed.begin(), closed.end(), r) == closed.end()) closed.push_back(r);
  }
  for (std::size_t head = 0; head < closed.size(); ++head) {
    std::uint64_t c = closed[head];
    for (int i = 0; i < m.rows(); ++i) {
      std::uint64_t cc = c & m.row_bits(i);
      if (cc && std::find(closed.begin(), closed.end(), cc) == closed.end()) closed.push_back(cc);
    }
  }
  std::vector<Rectangle> out;
  out.reserve(closed.size());
  for (std::uint64_t c : closed) {
    std::uint64_t rset = 0;
    for (int i = 0; i < m.rows(); ++i)
      if ((m.row_bits(i) & c) == c) rset |= std::uint64_t{1} << i;
    out.push_back(Rectangle{rset, c});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<int, PartitionCert> binary_rank(const BinaryMatrix& m, Budget* budget) {
  if (!m.has_one()) throw std::domain_error("matrix has no 1-entry");
  Region s = ones_region(m);
  PartitionSolver solver{m, budget, 0, {}};
  // One rectangle per nonempty row is always a valid partition.
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i]) solver.best_cert.push_back(Rectangle{std::uint64_t{1} << i, s[i]});
  solver.best = static_cast<int>(solver.best_cert.size());
  std::vector<Rectangle> cur;
  solver.optimize(s, cur);
  PartitionCert cert;
  if (!solver.extract(s, solver.best, cert.rectangles))
    throw std::logic_error("partition extraction failed");
  return {solver.best, std::move(cert)};
}

std::pair<int, CoverCert> boolean_rank(const BinaryMatrix& m, Budget* budget) {
  if (!m.has_one()) throw std::domain_error("matrix has no 1-entry");
  Region s = ones_region(m);
  CoverSolver solver{m, budget, maximal_rectangles(m), 0, {}};
  solver.best_cert = greedy_cover(solver.pool, s);
  solver.best = static_cast<int>(solver.best_cert.size());
  std::vector<Rectangle> cur;
  solver.optimize(s, cur);
  CoverCert cert;
  if (!solver.extract(s, solver.best, cert.rectangles))
    throw std::logic_error("cover extraction failed");
  return {solver.best, std::move(cert)};
}

std::pair<int, IsolationCert> isolation_number(const BinaryMatrix& m, Budget* budget) {
  if (!m.has_one()) throw std::domain_error("matrix has no 1-entry");
  IsoGraph g = build_iso_graph(m);
  int k = static_cast<int>(g.cells.size());
  IsoSolver solver{g, budget, 0, {}};
  VertSet all(static_cast<std::size_t>(g.blocks), 0);
  for (int v = 0; v < k; ++v) all[static_cast<std::size_t>(v >> 6)] |= std::uint64_t{1} << (v & 63);
  std::vector<int> cur;
  solver.expand(all, cur);

  // Lexicographically first maximum set: commit each vertex in order when a
  // completion to full size is still feasible.
  IsolationCert cert;
  VertSet cand = all;
  int have = 0;
  for (int v = 0; v < k && have < solver.best; ++v) {
    if (!vs_test(cand, v)) continue;
    VertSet incl = cand;
    vs_clear(incl, v);
    for (std::size_t b = 0; b < incl.size(); ++b)
      incl[b] &= ~g.adj[static_cast<std::size_t>(v)][b];
    if (solver.feasible(incl, have + 1, solver.best)) {
      cert.entries.push_back(g.cells[static_cast<std::size_t>(v)]);
      ++have;
      cand = std::move(incl);
    } else {
      vs_clear(cand, v);
    }
  }
  if (have != solver.best) throw std::logic_error("isolation extraction failed");
  return {solver.best, std::move(cert)};
}

bool verify(const BinaryMatrix& m, const PartitionCert& cert) {
  Region covered(static_cast<std::size_t>(m.rows()), 0);
  for (const Rectangle& r : cert.rectangles) {
    if (!rect_ok(m, r)) return false;
    std::uint64_t rows = r.row_set;
    while (rows) {
      int i = std::countr_zero(rows);
      rows &= rows - 1;
      if (covered[static_cast<std::size_t>(i)] & r.col_set) return false;  // overlap
      covered[static_cast<std::size_t>(i)] |= r.col_set;
    }
  }
  for (int i = 0; i < m.rows(); ++i)
    if (covered[static_cast<std::size_t>(i)] != m.row_bits(i)) return false;
  return true;
}

bool verify(const BinaryMatrix& m, const CoverCert& cert) {
  Region covered(static_cast<std::size_t>(m.rows()), 0);
  for (const Rectangle& r : cert.rectangles) {
    if (!rect_ok(m, r)) return false;
    std::uint64_t rows = r.row_set;
    while (rows) {
      int i = std::countr_zero(rows);
      rows &= rows - 1;
      covered[static_cast<std::size_t>(i)] |= r.col_set;
    }
  }
  for (int i = 0; i < m.rows(); ++i)
    if (covered[static_cast<std::size_t>(i)] != m.row_bits(i)) return false;
  return true;
}

bool verify(const BinaryMatrix& m, const IsolationCert& cert) {
  for (auto [i, j] : cert.entries) {
    if (i < 0 || i >= m.rows() || j < 0 || j >= m.cols()) return false;
    if (!m.get(i, j)) return false;
  }
  for (std::size_t a = 0; a < cert.entries.size(); ++a)
    for (std::size_t b = a + 1; b < cert.entries.size(); ++b) {
      auto [i, j] = cert.entries[a];
      auto [p, q] = cert.entries[b];
      if (i == p || j == q) return false;
      if (m.get(i, q) && m.get(p, j)) return false;
    }
  return true;
}

std::vector<Rectangle> ksum_partition(const BinaryMatrix& m, const KSumWitness& w) {
  std::vector<std::uint64_t> lines;
  int count = w.axis == Axis::kRow ? m.rows() : m.cols();
  auto line_bits = [&](int idx) {
    return w.axis == Axis::kRow ? m.row_bits(idx) : m.col_bits(idx);
  };
  if (w.target < 0 || w.target >= count) throw std::invalid_argument("invalid witness: bad target");
  std::uint64_t un = 0;
  int popsum = 0;
  for (int sidx : w.summands) {
    if (sidx < 0 || sidx >= count || sidx == w.target)
      throw std::invalid_argument("invalid witness: bad summand");
    un |= line_bits(sidx);
    popsum += std::popcount(line_bits(sidx));
  }
  if (popsum != std::popcount(un) || un != line_bits(w.target))
    throw std::invalid_argument("invalid witness: lines do not sum to target");

  // Each summand line, jointly with the target line, spans one rectangle
  // over the summand's support; disjoint supports make them a partition of
  // all ones of the k+1 lines involved.  A zero summand line contributes no
  // ones and therefore no rectangle.
  std::vector<Rectangle> out;
  for (int sidx : w.summands) {
    if (line_bits(sidx) == 0) continue;
    Rectangle r;
    std::uint64_t pair_mask =
        (std::uint64_t{1} << sidx) | (std::uint64_t{1} << w.target);
    if (w.axis == Axis::kRow) {
      r.row_set = pair_mask;
      r.col_set = line_bits(sidx);
    } else {
      r.col_set = pair_mask;
      r.row_set = line_bits(sidx);
    }
    out.push_back(r);
  }
  return out;
}

RankProfile rank_profile(const BinaryMatrix& m, Budget* budget) {
  KernelResult k = kernel_with_classes(m);

  RankProfile p;
  p.real = real_rank(m);
  auto [bin, part] = binary_rank(k.kernel, budget);
  auto [boo, cover] = boolean_rank(k.kernel, budget);
  auto [iso, iso_set] = isolation_number(k.kernel, budget);

  p.binary = bin;
  p.boolean = boo;
  p.isolation = iso;
  for (const Rectangle& r : part.rectangles)
    p.partition.rectangles.push_back(lift_rect(r, k.row_classes, k.col_classes));
  for (const Rectangle& r : cover.rectangles)
    p.cover.rectangles.push_back(lift_rect(r, k.row_classes, k.col_classes));
  for (auto [i, j] : iso_set.entries)
    p.isolation_set.entries.emplace_back(k.row_classes[static_cast<std::size_t>(i)].front(),
                                         k.col_classes[static_cast<std::size_t>(j)].front());
  return p;
}

namespace {

// Index sets of a Kronecker rectangle: every pair (a_idx, b_idx) maps to
// a_idx * b_dim + b_idx.
std::uint64_t kron_set(std::uint64_t a_set, std::uint64_t b_set, int b_dim) {
  std::uint64_t out = 0;
  for (int i = 0; i < 64 && i * b_dim < 64; ++i) {
    if (((a_set >> i) & 1ull) == 0) continue;
    for (int k = 0; k < b_dim && i * b_dim + k < 64; ++k)
      if ((b_set >> k) & 1ull) out |= 1ull << (i * b_dim + k);
  }
  return out;
}

}  // namespace

PartitionCert kron_compose(const PartitionCert& a, const PartitionCert& b,
                           int b_rows, int b_cols) {
  PartitionCert out;
  for (const Rectangle& ra : a.rectangles)
    for (const Rectangle& rb : b.rectangles)
      out.rectangles.push_back({kron_set(ra.row_set, rb.row_set, b_rows),
                                kron_set(ra.col_set, rb.col_set, b_cols)});
  return out;
}

IsolationCert kron_compose(const IsolationCert& a, const IsolationCert& b,
                           int b_rows, int b_cols) {
  IsolationCert out;
  for (auto [i, j] : a.entries)
    for (auto [k, l] : b.entries)
      out.entries.emplace_back(i * b_rows + k, j * b_cols + l);
  return out;
}

}  // namespace matrank
