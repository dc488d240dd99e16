#include "matrank/enumerate.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <exception>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "matrank/constructions.hpp"
#include "matrank/rank_comb.hpp"
#include "matrank/rank_real.hpp"
#include "matrank/text_io.hpp"

namespace matrank {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kPass: return "PASS";
    case Verdict::kFail: return "FAIL";
    case Verdict::kInconclusive: return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

std::string to_string(Rank3Tag t) {
  switch (t) {
    case Rank3Tag::kA7Kernel: return "A7_kernel";
    case Rank3Tag::kContainsC4: return "contains_C4";
    case Rank3Tag::kOther: return "other";
  }
  return "other";
}

namespace {

std::string shape_str(int n, int m) {
  return std::to_string(n) + "x" + std::to_string(m);
}

const CatalogEntry& catalog_entry(const std::string& name) {
  const CatalogEntry* e = catalog_find(name);
  if (e == nullptr) throw std::logic_error("catalog entry missing: " + name);
  return *e;
}

CanonicalKey entry_key(const std::string& name) {
  return canonical_key(catalog_entry(name).matrix);
}

BinaryMatrix append_row(const BinaryMatrix& m, std::uint64_t v) {
  BinaryMatrix out(m.rows() + 1, m.cols());
  for (int i = 0; i < m.rows(); ++i) out.assign_row_bits(i, m.row_bits(i));
  out.assign_row_bits(m.rows(), v);
  return out;
}

BinaryMatrix append_col(const BinaryMatrix& m, std::uint64_t v) {
  BinaryMatrix out(m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i)
    out.assign_row_bits(i, m.row_bits(i) | (((v >> i) & 1ull) << m.cols()));
  return out;
}

// The canonical representative re-oriented to a caller-declared shape (the
// canonical orientation has rows <= cols; transposing is the only other
// shape a class member can have).
BinaryMatrix oriented_to(BinaryMatrix canon_rep, int rows, int cols) {
  if (canon_rep.rows() == rows && canon_rep.cols() == cols) return canon_rep;
  return transpose(canon_rep);
}

// Adds every admissible one-line extension of one base matrix to out.
void extend_into(const BinaryMatrix& base, Axis axis, int d, Budget* budget,
                 int new_rows, int new_cols,
                 std::map<CanonicalKey, BinaryMatrix>& out) {
  const std::vector<std::uint64_t> candidates = span_zero_one_vectors(base, axis);
  const int lines = axis == Axis::kRow ? base.rows() : base.cols();
  for (std::uint64_t v : candidates) {
    if (budget != nullptr) budget->charge();
    if (v == 0) continue;
    bool duplicate = false;
    for (int i = 0; i < lines && !duplicate; ++i) {
      const std::uint64_t line =
          axis == Axis::kRow ? base.row_bits(i) : base.col_bits(i);
      duplicate = line == v;
    }
    if (duplicate) continue;
    BinaryMatrix child =
        axis == Axis::kRow ? append_row(base, v) : append_col(base, v);
    // A nonzero, non-duplicate span vector keeps the child basic with the
    // same rank; the filters guard the invariant rather than select.
    if (!is_basic(child) || real_rank(child) != d) continue;
    auto [rep, key] = canonical_form(child);
    BinaryMatrix stored = oriented_to(std::move(rep), new_rows, new_cols);
    out.emplace(std::move(key), std::move(stored));
  }
}

// ---------------------------------------------------------------------------
// Shape grid: ClassSets for every shape (n, m) with d <= n <= m <= built,
// grown level by level (level k = all shapes of maximum dimension k).  Each
// level is reproducible, so finished levels are cached per rank and replayed
// into later budgets as the exact node count a fresh build would charge.
// ---------------------------------------------------------------------------

using BucketMap = std::map<std::pair<int, int>, ClassSet>;

struct Grid {
  int d = 0;
  int built = 0;  // levels d..built are present
  BucketMap buckets;
  std::map<int, std::uint64_t> level_nodes;
};

std::mutex& grid_mutex() {
  static std::mutex mu;
  return mu;
}

std::map<int, Grid>& grid_store() {
  static std::map<int, Grid> grids;
  return grids;
}

// Builds level k: shapes (d, k) .. (k, k).  Every shape (n, k) with n < k
// comes from (n, k-1) by a column; the square (k, k) comes from the fresh
// (k-1, k) by a row.  Committed only when the whole level finishes, so a
// budget abort never caches partial levels.
void build_level(Grid& g, int k, Budget* budget, int jobs) {
  const std::uint64_t before = budget->used();
  BucketMap fresh;
  for (int n = g.d; n < k; ++n) {
    const ClassSet& parent = g.buckets.at({n, k - 1});
    fresh[{n, k}] = parent.classes.empty()
                        ? ClassSet{g.d, n, k, {}}
                        : extend(parent, Axis::kCol, k, budget, jobs);
  }
  const ClassSet& corner = fresh.at({k - 1, k});
  fresh[{k, k}] = corner.classes.empty()
                      ? ClassSet{g.d, k, k, {}}
                      : extend(corner, Axis::kRow, k, budget, jobs);
  for (auto& [shape, cs] : fresh) g.buckets[shape] = std::move(cs);
  g.level_nodes[k] = budget->used() - before;
  g.built = k;
}

BucketMap acquire_grid(int d, int max_dim, Budget* budget, int jobs) {
  if (d < 2 || d > 5) throw std::invalid_argument("rank must be in [2, 5]");
  if (max_dim < d || max_dim > BinaryMatrix::kMaxDim)
    throw std::invalid_argument("max_dim must be in [rank, 64]");
  std::scoped_lock lock(grid_mutex());
  Grid& g = grid_store()[d];
  if (g.built < d) {
    const std::uint64_t before = budget->used();
    ClassSet seeds = seed_representatives(d, budget);
    g.d = d;
    g.buckets[{d, d}] = std::move(seeds);
    g.level_nodes[d] = budget->used() - before;
    g.built = d;
  } else {
    budget->charge(g.level_nodes.at(d));
  }
  for (int k = d + 1; k <= max_dim; ++k) {
    if (k <= g.built) {
      budget->charge(g.level_nodes.at(k));
    } else {
      build_level(g, k, budget, jobs);
    }
  }
  BucketMap out;
  for (const auto& [shape, cs] : g.buckets)
    if (shape.second <= max_dim) out.emplace(shape, cs);
  return out;
}

// ---------------------------------------------------------------------------
// Report plumbing
// ---------------------------------------------------------------------------

template <typename Body>
SearchReport run_check(std::string check, std::map<std::string, std::int64_t> params,
                       std::uint64_t cap, Body&& body) {
  SearchReport r;
  r.check = std::move(check);
  r.params = std::move(params);
  r.budget_cap = cap;
  Budget budget(cap);
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(r, budget);
  } catch (const BudgetExceeded&) {
    r.verdict = Verdict::kInconclusive;
    r.evidence.push_back(
        "node budget exhausted before the run completed; no verdict");
  }
  r.budget_used = budget.used();
  r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - t0)
                     .count();
  return r;
}

void fill_shapes(SearchReport& r, const BucketMap& grid) {
  for (const auto& [shape, cs] : grid)
    r.shapes.push_back(
        {shape.first, shape.second, static_cast<std::uint64_t>(cs.classes.size())});
}

void conclude(SearchReport& r, const std::vector<std::string>& problems) {
  if (problems.empty()) {
    r.verdict = Verdict::kPass;
    return;
  }
  r.verdict = Verdict::kFail;
  for (const auto& p : problems) r.evidence.push_back("violation: " + p);
}

struct Quad {
  int real = 0;
  int binary = 0;
  int boolean = 0;
  int isolation = 0;
  friend bool operator==(const Quad&, const Quad&) = default;
};

Quad exact_quad(const BinaryMatrix& m, Budget* budget) {
  return {real_rank(m), binary_rank(m, budget).first,
          boolean_rank(m, budget).first, isolation_number(m, budget).first};
}

std::string quad_str(const Quad& q) {
  return "(" + std::to_string(q.real) + ", " + std::to_string(q.binary) + ", " +
         std::to_string(q.boolean) + ", " + std::to_string(q.isolation) + ")";
}

// A verified partition witnessing that a 2-sum matrix is never of full
// binary rank: the k-sum rectangles absorb the three named lines and every
// other line becomes its own rectangle, giving 2 + (lines - 3) pieces.
PartitionCert two_sum_completion(const BinaryMatrix& m, const KSumWitness& w) {
  PartitionCert cert{ksum_partition(m, w)};
  std::uint64_t named = 1ull << w.target;
  for (int s : w.summands) named |= 1ull << s;
  const int lines = w.axis == Axis::kRow ? m.rows() : m.cols();
  for (int i = 0; i < lines; ++i) {
    if ((named >> i) & 1ull) continue;
    const std::uint64_t support =
        w.axis == Axis::kRow ? m.row_bits(i) : m.col_bits(i);
    if (support == 0) continue;
    if (w.axis == Axis::kRow) {
      cert.rectangles.push_back({1ull << i, support});
    } else {
      cert.rectangles.push_back({support, 1ull << i});
    }
  }
  return cert;
}

// ---------------------------------------------------------------------------
// Named checks
// ---------------------------------------------------------------------------

SearchReport check_no5x5(const ReproduceOptions& opts) {
  return run_check(
      "no5x5_rank3", {{"d", 3}, {"max_dim", 5}}, opts.budget_cap,
      [&](SearchReport& r, Budget& b) {
        const BucketMap grid = acquire_grid(3, 5, &b, opts.jobs);
        fill_shapes(r, grid);
        const std::size_t n55 = grid.at({5, 5}).classes.size();
        r.evidence.push_back("basic 5x5 classes of real rank 3: " +
                             std::to_string(n55));
        std::vector<std::string> problems;
        if (n55 != 0) {
          problems.push_back("found " + std::to_string(n55) +
                             " basic 5x5 classes of real rank 3");
        } else {
          r.evidence.push_back("no basic 5x5 matrix of real rank 3 exists");
        }
        conclude(r, problems);
      });
}

SearchReport check_reps3x3(const ReproduceOptions& opts) {
  return run_check(
      "reps3x3", {{"d", 3}, {"max_dim", 3}}, opts.budget_cap,
      [&](SearchReport& r, Budget& b) {
        const BucketMap grid = acquire_grid(3, 3, &b, opts.jobs);
        fill_shapes(r, grid);
        const ClassSet& seeds = grid.at({3, 3});
        std::vector<std::string> problems;
        if (seeds.classes.size() != 7)
          problems.push_back("expected 7 classes of basic 3x3 rank-3 matrices, found " +
                             std::to_string(seeds.classes.size()));
        std::set<CanonicalKey> seen;
        for (int i = 1; i <= 7; ++i) {
          const std::string name = "fig2.A" + std::to_string(i);
          const CanonicalKey key = entry_key(name);
          if (seeds.classes.find(key) == seeds.classes.end()) {
            problems.push_back("catalog " + name +
                               " is missing from the enumerated classes");
          } else {
            r.evidence.push_back("catalog " + name + " realizes class " + key.hex());
            seen.insert(key);
          }
        }
        if (seen.size() != 7)
          problems.push_back("the seven catalog matrices are not pairwise inequivalent");
        conclude(r, problems);
      });
}

SearchReport check_rank3_structure(const ReproduceOptions& opts) {
  return run_check(
      "rank3_structure", {{"d", 3}, {"max_dim", 8}}, opts.budget_cap,
      [&](SearchReport& r, Budget& b) {
        const BucketMap grid = acquire_grid(3, 8, &b, opts.jobs);
        fill_shapes(r, grid);
        std::vector<std::string> problems;
        std::map<Rank3Tag, std::uint64_t> tags;
        std::uint64_t checked = 0;
        for (const auto& [shape, cs] : grid) {
          if (cs.classes.empty()) continue;
          if (shape.first >= 5)
            problems.push_back(shape_str(shape.first, shape.second) +
                               " is nonempty although rank-3 kernels need a side of at most 4");
          if (shape.second >= 8)
            problems.push_back(shape_str(shape.first, shape.second) +
                               " is nonempty although a rank-3 span holds at most 7 distinct nonzero lines");
          for (const auto& [key, rep] : cs.classes) {
            ++checked;
            const Rank3Classification cls = classify_rank3(rep);
            ++tags[cls.tag];
            const Quad q = exact_quad(rep, &b);
            const Quad predicted{3, cls.binary, cls.boolean, cls.isolation};
            if (q != predicted)
              problems.push_back("class " + key.hex() + ": tag " + to_string(cls.tag) +
                                 " predicts " + quad_str(predicted) +
                                 " but the solvers give " + quad_str(q));
            const bool has_c4 = cls.tag == Rank3Tag::kContainsC4;
            if ((q.binary == 4) != has_c4 || (q.boolean == 4) != has_c4)
              problems.push_back("class " + key.hex() +
                                 ": binary/Boolean rank 4 does not coincide with a C4 submatrix");
            if (cls.tag != Rank3Tag::kA7Kernel &&
                !(q.binary == q.boolean && q.boolean == q.isolation))
              problems.push_back("class " + key.hex() + ": quantities split " +
                                 quad_str(q) + " on a non-exceptional class");
          }
        }
        r.evidence.push_back("rank-3 classes checked: " + std::to_string(checked));
        r.evidence.push_back(
            std::to_string(tags[Rank3Tag::kOther]) +
            " with all three quantities equal to 3, " +
            std::to_string(tags[Rank3Tag::kContainsC4]) +
            " with a C4 submatrix and all three equal to 4, " +
            std::to_string(tags[Rank3Tag::kA7Kernel]) +
            " equivalent to the exceptional 3x3 class with (3, 2, 2)");
        r.evidence.push_back(
            "every class has at most 4 rows or at most 4 columns, and no class "
            "is wider than 7");
        conclude(r, problems);
      });
}

SearchReport check_c4_unique(const ReproduceOptions& opts) {
  return run_check(
      "c4_unique", {{"d", 3}, {"max_dim", 4}}, opts.budget_cap,
      [&](SearchReport& r, Budget& b) {
        const BucketMap grid = acquire_grid(3, 4, &b, opts.jobs);
        fill_shapes(r, grid);
        const ClassSet& bucket = grid.at({4, 4});
        const Quad target{3, 4, 4, 4};
        std::vector<CanonicalKey> hits;
        for (const auto& [key, rep] : bucket.classes)
          if (exact_quad(rep, &b) == target) hits.push_back(key);
        std::vector<std::string> problems;
        const CanonicalKey c4 = entry_key("c4");
        if (hits.size() != 1)
          problems.push_back("expected exactly one 4x4 class with profile (3, 4, 4, 4), found " +
                             std::to_string(hits.size()));
        else if (hits.front() != c4)
          problems.push_back("the unique (3, 4, 4, 4) class " + hits.front().hex() +
                             " is not the catalog c4 class");
        r.evidence.push_back("basic 4x4 classes of real rank 3: " +
                             std::to_string(bucket.classes.size()) +
                             ", all profiles computed exactly");
        if (problems.empty())
          r.evidence.push_back("unique class with profile (3, 4, 4, 4): " +
                               c4.hex() + " = catalog c4");
        r.evidence.push_back(
            "a non-basic 4x4 matrix reduces to a kernel with at most 3 rows or "
            "at most 3 columns, so its binary rank is at most 3; matrices of "
            "other real ranks miss the profile outright, and basic rank-3 "
            "classes therefore exhaust the candidates");
        conclude(r, problems);
      });
}

SearchReport check_c6_unique(const ReproduceOptions& opts) {
  return run_check(
      "c6_unique", {{"d", 4}, {"max_dim", 6}}, opts.budget_cap,
      [&](SearchReport& r, Budget& b) {
        const BucketMap grid = acquire_grid(4, 6, &b, opts.jobs);
        fill_shapes(r, grid);
        const ClassSet& bucket = grid.at({6, 6});
        std::vector<std::string> problems;
        std::vector<CanonicalKey> hits;
        std::uint64_t with_two_sum = 0;
        std::uint64_t solved = 0;
        const Quad target{4, 6, 6, 6};
        for (const auto& [key, rep] : bucket.classes) {
          if (const auto w = find_k_sum(rep, 2)) {
            ++with_two_sum;
            const PartitionCert cert = two_sum_completion(rep, *w);
            if (!verify(rep, cert) || cert.rectangles.size() > 5)
              problems.push_back("class " + key.hex() +
                                 ": 2-sum completion did not yield a valid partition of size at most 5");
            continue;  // binary rank <= 5, cannot reach (4, 6, 6, 6)
          }
          ++solved;
          if (exact_quad(rep, &b) == target) hits.push_back(key);
        }
        const CanonicalKey c6 = entry_key("c6");
        if (hits.size() != 1)
          problems.push_back("expected exactly one 6x6 class with profile (4, 6, 6, 6), found " +
                             std::to_string(hits.size()));
        else if (hits.front() != c6)
          problems.push_back("the unique (4, 6, 6, 6) class " + hits.front().hex() +
                             " is not the catalog c6 class");
        r.evidence.push_back(
            "basic 6x6 classes of real rank 4: " + std::to_string(bucket.classes.size()) +
            "; " + std::to_string(with_two_sum) +
            " have a 2-sum and a verified 5-rectangle partition (binary rank at most 5); " +
            std::to_string(solved) + " were solved exactly");
        if (problems.empty())
          r.evidence.push_back("unique class with profile (4, 6, 6, 6): " + c6.hex() +
                               " = catalog c6");
        r.evidence.push_back(
            "a non-basic 6x6 matrix reduces to a kernel with at most 5 rows or "
            "at most 5 columns, capping its binary rank at 5, so basic rank-4 "
            "classes exhaust the candidates");
        conclude(r, problems);
      });
}

SearchReport check_characterize6(const ReproduceOptions& opts) {
  return run_check(
      "characterize6", {{"d", 4}, {"max_dim", 6}}, opts.budget_cap,
      [&](SearchReport& r, Budget& b) {
        const BucketMap grid = acquire_grid(4, 6, &b, opts.jobs);
        fill_shapes(r, grid);
        const ClassSet& bucket = grid.at({6, 6});
        std::vector<std::string> problems;
        const std::vector<std::string> names = {"c6", "fig3.A1", "fig3.A2", "fig3.A3"};
        std::map<CanonicalKey, std::string> expected;
        for (const auto& name : names) expected.emplace(entry_key(name), name);
        std::set<CanonicalKey> no_two_sum;
        std::uint64_t with_two_sum = 0;
        for (const auto& [key, rep] : bucket.classes) {
          if (const auto w = find_k_sum(rep, 2)) {
            ++with_two_sum;
            const PartitionCert cert = two_sum_completion(rep, *w);
            if (!verify(rep, cert) || cert.rectangles.size() > 5)
              problems.push_back("class " + key.hex() +
                                 ": 2-sum completion did not yield a valid partition of size at most 5");
          } else {
            no_two_sum.insert(key);
          }
        }
        if (no_two_sum.size() != 4)
          problems.push_back("expected exactly 4 classes without a 2-sum, found " +
                             std::to_string(no_two_sum.size()));
        for (const auto& key : no_two_sum)
          if (expected.find(key) == expected.end())
            problems.push_back("class " + key.hex() +
                               " has no 2-sum but matches no catalog matrix");
        for (const auto& [key, name] : expected)
          if (no_two_sum.find(key) == no_two_sum.end())
            problems.push_back("catalog " + name +
                               " is not among the enumerated classes without a 2-sum");
        for (const auto& name : names) {
          const CatalogEntry& e = catalog_entry(name);
          const Quad q = exact_quad(e.matrix, &b);
          const Quad want{e.expected.real, e.expected.binary, e.expected.boolean,
                          e.expected.isolation};
          if (q != want) {
            problems.push_back("catalog " + name + ": solver profile " + quad_str(q) +
                               " differs from the pinned " + quad_str(want));
          } else {
            r.evidence.push_back("witness " + name + " with profile " + quad_str(q) +
                                 ":\n" + matrix_to_string(e.matrix));
          }
        }
        r.evidence.push_back(
            "basic 6x6 classes of real rank 4: " + std::to_string(bucket.classes.size()) +
            "; " + std::to_string(with_two_sum) +
            " have a 2-sum witness and a verified partition into 5 rectangles, "
            "so their binary and Boolean ranks are at most 5; the remaining " +
            std::to_string(no_two_sum.size()) + " match the catalog quadruple");
        conclude(r, problems);
      });
}

SearchReport check_real47(const ReproduceOptions& opts) {
  return run_check(
      "real47", {{"d", 4}, {"max_dim", 7}}, opts.budget_cap,
      [&](SearchReport& r, Budget& b) {
        const BucketMap grid = acquire_grid(4, 7, &b, opts.jobs);
        fill_shapes(r, grid);
        const ClassSet& bucket = grid.at({7, 7});
        std::vector<std::string> problems;
        std::uint64_t with_two_sum = 0;
        std::uint64_t solved = 0;
        for (const auto& [key, rep] : bucket.classes) {
          if (const auto w = find_k_sum(rep, 2)) {
            ++with_two_sum;
            const PartitionCert cert = two_sum_completion(rep, *w);
            if (!verify(rep, cert) || cert.rectangles.size() > 6)
              problems.push_back("class " + key.hex() +
                                 ": 2-sum completion did not yield a valid partition of size at most 6");
          } else {
            ++solved;
            const int bin = binary_rank(rep, &b).first;
            if (bin > 6)
              problems.push_back("class " + key.hex() + " has binary rank " +
                                 std::to_string(bin));
          }
        }
        // Every basic rank-4 7x7 matrix that contains one of the four
        // exceptional 6x6 matrices: append a column from the column span,
        // then a row from the grown row span (zero and duplicate lines stay
        // in the pool; the final basicness test is the only filter).
        std::map<CanonicalKey, BinaryMatrix> extensions;
        for (const auto& name : {"c6", "fig3.A1", "fig3.A2", "fig3.A3"}) {
          const BinaryMatrix& a = catalog_entry(name).matrix;
          for (const std::uint64_t v : span_zero_one_vectors(a, Axis::kCol)) {
            const BinaryMatrix wide = append_col(a, v);
            for (const std::uint64_t w : span_zero_one_vectors(wide, Axis::kRow)) {
              b.charge();
              BinaryMatrix m = append_row(wide, w);
              if (!is_basic(m)) continue;
              if (real_rank(m) != 4) {
                problems.push_back(std::string("extension of ") + name +
                                   " changed the real rank");
                continue;
              }
              auto [rep, key] = canonical_form(m);
              extensions.emplace(std::move(key), std::move(rep));
            }
          }
        }
        std::uint64_t ext_checked = 0;
        for (const auto& [key, rep] : extensions) {
          ++ext_checked;
          if (bucket.classes.find(key) == bucket.classes.end())
            problems.push_back("extension class " + key.hex() +
                               " is missing from the enumerated 7x7 classes");
          if (!find_k_sum(rep, 2))
            problems.push_back("extension class " + key.hex() + " has no 2-sum witness");
        }
        r.evidence.push_back(
            "basic 7x7 classes of real rank 4: " + std::to_string(bucket.classes.size()) +
            "; " + std::to_string(with_two_sum) +
            " have a 2-sum and a verified 6-rectangle partition; " +
            std::to_string(solved) +
            " were solved exactly; every class has binary rank at most 6");
        r.evidence.push_back(
            "7x7 one-row-one-column extensions of the four exceptional 6x6 "
            "classes: " + std::to_string(ext_checked) +
            " classes, each with a 2-sum witness");
        conclude(r, problems);
      });
}

SearchReport check_real478(const ReproduceOptions& opts) {
  return run_check(
      "real478", {{"d", 4}, {"max_dim", 8}}, opts.budget_cap,
      [&](SearchReport& r, Budget& b) {
        const BucketMap grid = acquire_grid(4, 8, &b, opts.jobs);
        fill_shapes(r, grid);
        const ClassSet& bucket = grid.at({7, 8});
        std::vector<std::string> problems;
        if (bucket.classes.size() != 2)
          problems.push_back("expected exactly 2 classes of basic 8x7 rank-4 matrices, found " +
                             std::to_string(bucket.classes.size()));
        for (const auto& name : {"lemma17.m1", "lemma17.m2"}) {
          const CatalogEntry& e = catalog_entry(name);
          const CanonicalKey key = canonical_key(e.matrix);
          if (bucket.classes.find(key) == bucket.classes.end()) {
            problems.push_back("catalog " + std::string(name) +
                               " is missing from the enumerated classes");
            continue;
          }
          const auto w = find_k_sum_axis(e.matrix, 2, Axis::kCol);
          if (!w) {
            problems.push_back("catalog " + std::string(name) + " has no column 2-sum");
            continue;
          }
          const PartitionCert cert = two_sum_completion(e.matrix, *w);
          if (!verify(e.matrix, cert) || cert.rectangles.size() > 6) {
            problems.push_back("catalog " + std::string(name) +
                               ": 2-sum completion did not yield a valid partition of size at most 6");
            continue;
          }
          r.evidence.push_back(
              "witness " + std::string(name) + ": columns " +
              std::to_string(w->summands[0] + 1) + " and " +
              std::to_string(w->summands[1] + 1) + " sum to column " +
              std::to_string(w->target + 1) +
              "; verified partition into " + std::to_string(cert.rectangles.size()) +
              " rectangles, so the binary rank is at most 6:\n" +
              matrix_to_string(e.matrix));
        }
        r.evidence.push_back("basic 8x7 classes of real rank 4: " +
                             std::to_string(bucket.classes.size()));
        conclude(r, problems);
      });
}

SearchReport check_no8x8(const ReproduceOptions& opts) {
  return run_check(
      "no8x8_rank4", {{"d", 4}, {"max_dim", 8}}, opts.budget_cap,
      [&](SearchReport& r, Budget& b) {
        const BucketMap grid = acquire_grid(4, 8, &b, opts.jobs);
        fill_shapes(r, grid);
        const std::size_t n88 = grid.at({8, 8}).classes.size();
        r.evidence.push_back("basic 8x8 classes of real rank 4: " +
                             std::to_string(n88));
        std::vector<std::string> problems;
        if (n88 != 0) {
          problems.push_back("found " + std::to_string(n88) +
                             " basic 8x8 classes of real rank 4");
        } else {
          r.evidence.push_back("no basic 8x8 matrix of real rank 4 exists");
        }
        conclude(r, problems);
      });
}

SearchReport check_theorem1(const ReproduceOptions& opts) {
  const int n = opts.n.value_or(6);
  if (n < 4) throw std::invalid_argument("theorem1: n must be at least 4");
  if (n > BinaryMatrix::kMaxDim)
    throw std::invalid_argument("theorem1: n exceeds the dimension cap");
  if (n == 5) {
    return run_check(
        "theorem1", {{"n", 5}}, opts.budget_cap, [&](SearchReport& r, Budget& b) {
          const BucketMap grid = acquire_grid(3, 5, &b, opts.jobs);
          fill_shapes(r, grid);
          const std::size_t n55 = grid.at({5, 5}).classes.size();
          std::vector<std::string> problems;
          if (n55 != 0)
            problems.push_back("found " + std::to_string(n55) +
                               " basic 5x5 classes of real rank 3");
          r.evidence.push_back(
              "not applicable: the size-5 case is excluded — a 5x5 member would "
              "need real rank 3, and no basic 5x5 matrix of real rank 3 exists "
              "(enumerated class count: " + std::to_string(n55) + ")");
          conclude(r, problems);
        });
  }
  return run_check(
      "theorem1", {{"n", n}}, opts.budget_cap, [&](SearchReport& r, Budget& b) {
        const BinaryMatrix m =
            n % 2 == 0 ? circulant_C(n) : odd_gap_matrix((n - 1) / 2);
        r.shapes.push_back({n, n, 1});
        std::vector<std::string> problems;
        if (!is_basic(m)) problems.push_back("the constructed matrix is not basic");
        const RankProfile p = rank_profile(m, &b);
        const int half = n / 2;
        const Quad want{half + 1, 2 * half, 2 * half, 2 * half};
        const Quad got{p.real, p.binary, p.boolean, p.isolation};
        if (got != want)
          problems.push_back("profile " + quad_str(got) + " differs from the target " +
                             quad_str(want));
        if (!verify(m, p.partition) || !verify(m, p.cover) || !verify(m, p.isolation_set))
          problems.push_back("a certificate failed verification");
        r.evidence.push_back(
            std::string("construction for n = ") + std::to_string(n) +
            (n % 2 == 0 ? " (even): circulant with half-length runs of ones"
                        : " (odd): circulant core with an appended sum row and span column"));
        r.evidence.push_back("profile " + quad_str(got) +
                             " with verified certificates (partition " +
                             std::to_string(p.partition.rectangles.size()) + ", cover " +
                             std::to_string(p.cover.rectangles.size()) + ", isolation " +
                             std::to_string(p.isolation_set.entries.size()) + ")");
        conclude(r, problems);
      });
}

SearchReport check_rank4_bounds(const ReproduceOptions& opts) {
  const int max_dim = opts.max_dim.value_or(8);
  if (max_dim < 4 || max_dim > BinaryMatrix::kMaxDim)
    throw std::invalid_argument("rank4_bounds: max_dim must be in [4, 64]");
  return run_check(
      "rank4_bounds", {{"d", 4}, {"max_dim", max_dim}}, opts.budget_cap,
      [&](SearchReport& r, Budget& b) {
        const BucketMap grid = acquire_grid(4, max_dim, &b, opts.jobs);
        fill_shapes(r, grid);
        std::vector<std::string> problems;
        std::uint64_t checked = 0;
        Quad lo{99, 99, 99, 99};
        Quad hi{0, 0, 0, 0};
        for (const auto& [shape, cs] : grid) {
          (void)shape;
          for (const auto& [key, rep] : cs.classes) {
            ++checked;
            const Quad q = exact_quad(rep, &b);
            lo = {std::min(lo.real, q.real), std::min(lo.binary, q.binary),
                  std::min(lo.boolean, q.boolean), std::min(lo.isolation, q.isolation)};
            hi = {std::max(hi.real, q.real), std::max(hi.binary, q.binary),
                  std::max(hi.boolean, q.boolean), std::max(hi.isolation, q.isolation)};
            if (q.real != 4)
              problems.push_back("class " + key.hex() + " has real rank " +
                                 std::to_string(q.real));
            if (q.binary < 4 || q.binary > 6)
              problems.push_back("class " + key.hex() + " has binary rank " +
                                 std::to_string(q.binary) + " outside [4, 6]");
            if (q.boolean < 3 || q.boolean > 6)
              problems.push_back("class " + key.hex() + " has Boolean rank " +
                                 std::to_string(q.boolean) + " outside [3, 6]");
            if (q.isolation < 3 || q.isolation > 6)
              problems.push_back("class " + key.hex() + " has isolation number " +
                                 std::to_string(q.isolation) + " outside [3, 6]");
            if (!(q.isolation <= q.boolean && q.boolean <= q.binary))
              problems.push_back("class " + key.hex() + " violates isolation <= Boolean <= binary: " +
                                 quad_str(q));
          }
        }
        if (checked == 0) problems.push_back("no classes were enumerated");
        r.evidence.push_back("rank-4 classes checked: " + std::to_string(checked));
        if (checked != 0) {
          r.evidence.push_back("binary rank spans [" + std::to_string(lo.binary) + ", " +
                               std::to_string(hi.binary) + "], Boolean rank [" +
                               std::to_string(lo.boolean) + ", " + std::to_string(hi.boolean) +
                               "], isolation number [" + std::to_string(lo.isolation) + ", " +
                               std::to_string(hi.isolation) + "]");
        }
        conclude(r, problems);
      });
}

}  // namespace

ClassSet seed_representatives(int d, Budget* budget) {
  if (d < 2 || d > 5)
    throw std::invalid_argument("seed_representatives: rank must be in [2, 5]");
  ClassSet out{d, d, d, {}};
  if (d <= 4) {
    const std::uint64_t total = 1ull << (d * d);
    const std::uint64_t row_mask = (1ull << d) - 1;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      if (budget != nullptr) budget->charge();
      BinaryMatrix m(d, d);
      for (int i = 0; i < d; ++i)
        m.assign_row_bits(i, (mask >> (i * d)) & row_mask);
      if (!is_basic(m)) continue;
      if (real_rank(m) != d) continue;
      auto [rep, key] = canonical_form(m);
      out.classes.emplace(std::move(key), std::move(rep));
    }
    return out;
  }
  // d == 5: every class has a member whose rows strictly increase as binary
  // words, and full rank forces every row prefix to stay independent.
  std::vector<std::uint64_t> rows;
  auto prefix_independent = [&]() {
    BinaryMatrix p(static_cast<int>(rows.size()), 5);
    for (std::size_t i = 0; i < rows.size(); ++i)
      p.assign_row_bits(static_cast<int>(i), rows[i]);
    return real_rank(p) == static_cast<int>(rows.size());
  };
  auto rec = [&](auto&& self, std::uint64_t prev) -> void {
    for (std::uint64_t row = prev + 1; row < 32; ++row) {
      if (budget != nullptr) budget->charge();
      rows.push_back(row);
      if (prefix_independent()) {
        if (rows.size() == 5) {
          BinaryMatrix m(5, 5);
          for (int i = 0; i < 5; ++i) m.assign_row_bits(i, rows[static_cast<std::size_t>(i)]);
          if (is_basic(m)) {
            auto [rep, key] = canonical_form(m);
            out.classes.emplace(std::move(key), std::move(rep));
          }
        } else {
          self(self, row);
        }
      }
      rows.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

ClassSet extend(const ClassSet& s, Axis axis, int max_dim, Budget* budget, int jobs) {
  const int new_rows = s.rows + (axis == Axis::kRow ? 1 : 0);
  const int new_cols = s.cols + (axis == Axis::kCol ? 1 : 0);
  const int grown_dim = axis == Axis::kRow ? new_rows : new_cols;
  if (grown_dim > BinaryMatrix::kMaxDim)
    throw std::invalid_argument("extend: dimension cap exceeded");
  if (grown_dim > max_dim) throw std::length_error("extend: dimension bound exceeded");
  if (jobs < 1) throw std::invalid_argument("extend: jobs must be positive");

  // A square class holds both orientations of its members, and extensions of
  // the two orientations can land in different classes, so both are used.
  std::vector<BinaryMatrix> bases;
  const bool square = s.rows == s.cols;
  for (const auto& [key, rep] : s.classes) {
    bases.push_back(rep);
    if (square) {
      BinaryMatrix t = transpose(rep);
      if (!(t == rep)) bases.push_back(std::move(t));
    }
  }

  std::map<CanonicalKey, BinaryMatrix> merged;
  if (jobs == 1 || bases.size() <= 1) {
    for (const BinaryMatrix& base : bases)
      extend_into(base, axis, s.rank, budget, new_rows, new_cols, merged);
  } else {
    const int workers =
        static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(jobs), bases.size()));
    std::vector<std::map<CanonicalKey, BinaryMatrix>> outs(
        static_cast<std::size_t>(workers));
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
      threads.emplace_back([&, w] {
        try {
          for (std::size_t i = static_cast<std::size_t>(w); i < bases.size();
               i += static_cast<std::size_t>(workers))
            extend_into(bases[i], axis, s.rank, budget, new_rows, new_cols,
                        outs[static_cast<std::size_t>(w)]);
        } catch (...) {
          errors[static_cast<std::size_t>(w)] = std::current_exception();
        }
      });
    }
    for (auto& t : threads) t.join();
    for (const auto& e : errors)
      if (e) std::rethrow_exception(e);
    for (auto& o : outs) merged.merge(o);
  }
  return ClassSet{s.rank, new_rows, new_cols, std::move(merged)};
}

SearchReport search_max_basic(int d, int max_dim, std::uint64_t budget_cap, int jobs) {
  if (jobs < 1) throw std::invalid_argument("search_max_basic: jobs must be positive");
  if (d < 2 || d > 5)
    throw std::invalid_argument("search_max_basic: rank must be in [2, 5]");
  if (max_dim < d || max_dim > BinaryMatrix::kMaxDim)
    throw std::invalid_argument("search_max_basic: max_dim must be in [rank, 64]");
  return run_check(
      "search_max_basic", {{"d", d}, {"max_dim", max_dim}}, budget_cap,
      [&](SearchReport& r, Budget& b) {
        const BucketMap grid = acquire_grid(d, max_dim, &b, jobs);
        fill_shapes(r, grid);
        std::vector<std::pair<int, int>> maximal;
        for (const auto& [shape, cs] : grid) {
          if (cs.classes.empty()) continue;
          bool dominated = false;
          for (const auto& [other, cs2] : grid) {
            if (cs2.classes.empty() || other == shape) continue;
            if (other.first >= shape.first && other.second >= shape.second) {
              dominated = true;
              break;
            }
          }
          if (!dominated) maximal.push_back(shape);
        }
        std::string line = "maximal nonempty shapes:";
        for (const auto& [n, m] : maximal) line += " " + shape_str(n, m);
        if (maximal.empty()) line += " none";
        r.evidence.push_back(line);
        int square = 0;
        for (const auto& [shape, cs] : grid)
          if (shape.first == shape.second && !cs.classes.empty())
            square = std::max(square, shape.first);
        r.evidence.push_back(square > 0
                                 ? "largest nonempty square: " + shape_str(square, square)
                                 : "no nonempty square shapes");
        r.verdict = Verdict::kPass;
      });
}

SearchReport reproduce(const std::string& check_id, const ReproduceOptions& opts) {
  if (opts.jobs < 1) throw std::invalid_argument("reproduce: jobs must be positive");
  if (check_id == "no5x5_rank3") return check_no5x5(opts);
  if (check_id == "reps3x3") return check_reps3x3(opts);
  if (check_id == "rank3_structure") return check_rank3_structure(opts);
  if (check_id == "c4_unique") return check_c4_unique(opts);
  if (check_id == "c6_unique") return check_c6_unique(opts);
  if (check_id == "characterize6") return check_characterize6(opts);
  if (check_id == "real47") return check_real47(opts);
  if (check_id == "real478") return check_real478(opts);
  if (check_id == "no8x8_rank4") return check_no8x8(opts);
  if (check_id == "theorem1") return check_theorem1(opts);
  if (check_id == "rank4_bounds") return check_rank4_bounds(opts);
  throw std::invalid_argument("unknown check id: " + check_id);
}

const std::vector<std::string>& reproduce_check_ids() {
  static const std::vector<std::string> ids = {
      "no5x5_rank3", "reps3x3",       "rank3_structure", "c4_unique",
      "c6_unique",   "characterize6", "real47",          "real478",
      "no8x8_rank4", "theorem1",      "rank4_bounds"};
  return ids;
}

namespace {

// Lexicographic successor of a k-subset of {0, .., n-1}.
bool next_combination(std::vector<int>& idx, int n) {
  const int k = static_cast<int>(idx.size());
  for (int i = k - 1; i >= 0; --i) {
    if (idx[static_cast<std::size_t>(i)] < n - (k - i)) {
      ++idx[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j)
        idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

Rank3Classification classify_rank3(const BinaryMatrix& m) {
  if (real_rank(m) != 3)
    throw std::invalid_argument("classify_rank3: real rank 3 required");
  const BinaryMatrix k = kernel(m);
  if (are_equivalent(k, catalog_entry("fig2.A7").matrix))
    return {Rank3Tag::kA7Kernel, 3, 2, 2};
  if (k.rows() >= 4 && k.cols() >= 4) {
    const BinaryMatrix c4 = circulant_C(4);
    std::vector<int> ri{0, 1, 2, 3};
    do {
      std::vector<int> ci{0, 1, 2, 3};
      do {
        if (are_equivalent(submatrix(k, ri, ci), c4))
          return {Rank3Tag::kContainsC4, 4, 4, 4};
      } while (next_combination(ci, k.cols()));
    } while (next_combination(ri, k.rows()));
  }
  return {Rank3Tag::kOther, 3, 3, 3};
}

}  // namespace matrank
