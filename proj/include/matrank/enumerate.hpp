#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "matrank/budget.hpp"
#include "matrank/canonical.hpp"
#include "matrank/matrix.hpp"

namespace matrank {

// One representative per equivalence class of basic matrices of one fixed
// real rank and shape.  Representatives are stored oriented to the declared
// shape (the canonical form, transposed when the canonical orientation
// differs) and keyed by their orientation-free canonical key, so members
// are pairwise inequivalent by construction.
struct ClassSet {
  int rank = 0;
  int rows = 0;
  int cols = 0;
  std::map<CanonicalKey, BinaryMatrix> classes;
};

// All equivalence classes of basic d x d matrices of real rank d.  For
// d <= 4 every d x d candidate is filtered directly (basic, rank d,
// canonical dedup).  For d = 5 generation is staged: rows are enumerated as
// strictly increasing words (every class has a row-sorted member) and
// prefixes are pruned unless their rows stay linearly independent.  Throws
// std::invalid_argument unless 2 <= d <= 5.
ClassSet seed_representatives(int d, Budget* budget = nullptr);

// Every one-line extension of every representative of s along the given
// axis.  A candidate line must lie in the span of the existing lines
// (anything else raises the rank), be nonzero, and not duplicate an
// existing line; the result must stay basic of unchanged rank.  Children
// are deduped canonically across the whole generation.  For square s the
// transpose of each representative is extended as well: a square class
// contains both orientations of its members, and extending only the stored
// one can miss classes reachable only from the transposed side.  Throws
// std::length_error when the grown dimension would exceed max_dim, and
// std::invalid_argument when it would exceed the representation cap.
ClassSet extend(const ClassSet& s, Axis axis, int max_dim = BinaryMatrix::kMaxDim,
                Budget* budget = nullptr, int jobs = 1);

struct ShapeCount {
  int rows = 0;
  int cols = 0;
  std::uint64_t classes = 0;
};

enum class Verdict { kPass, kFail, kInconclusive };
std::string to_string(Verdict v);

// Outcome of one enumeration sweep or named reproduction check.  Shapes are
// reported normalized (rows <= cols; a shape stands for both orientations).
// Verdicts derive only from enumerated data and solver outputs; a run that
// exhausts its node budget reports kInconclusive, never a silent pass or
// fail.  Class counts, verdicts, and evidence are deterministic across runs
// and worker counts.
struct SearchReport {
  std::string check;
  std::map<std::string, std::int64_t> params;
  std::vector<ShapeCount> shapes;
  Verdict verdict = Verdict::kInconclusive;
  std::vector<std::string> evidence;
  std::uint64_t budget_cap = 0;
  std::uint64_t budget_used = 0;
  std::int64_t elapsed_ms = 0;
};

// Breadth-first growth over all shapes n x m with d <= n <= m <= max_dim:
// each shape is reached by extending the previous one by a single line, so
// every basic rank-d matrix of an in-range shape is counted (a basic rank-d
// matrix always contains basic rank-d submatrices of every intermediate
// shape).  Reports per-shape class counts and the maximal nonempty shapes.
SearchReport search_max_basic(int d, int max_dim, std::uint64_t budget_cap = 0,
                              int jobs = 1);

struct ReproduceOptions {
  std::optional<int> n;        // theorem1: construction size (default 6)
  std::optional<int> max_dim;  // rank4_bounds: sweep cap (default 8)
  std::uint64_t budget_cap = 0;  // total node cap; 0 = unlimited
  int jobs = 1;                  // enumeration worker threads
};

// Runs one named reproduction check end to end and reports PASS/FAIL with
// full evidence (class counts, matched catalog names, certificate sizes).
// Known ids: no5x5_rank3, reps3x3, rank3_structure, c4_unique, c6_unique,
// characterize6, real47, real478, no8x8_rank4, theorem1, rank4_bounds.
// Throws std::invalid_argument for an unknown id or bad parameters.
SearchReport reproduce(const std::string& check_id, const ReproduceOptions& opts = {});

// The known check ids, in documentation order.
const std::vector<std::string>& reproduce_check_ids();

enum class Rank3Tag { kA7Kernel, kContainsC4, kOther };
std::string to_string(Rank3Tag t);

// Structure tag of a real-rank-3 matrix together with the combinatorial
// quantities the tag forces for it (binary rank, Boolean rank, isolation
// number); all three are invariant under the kernel reduction.
struct Rank3Classification {
  Rank3Tag tag = Rank3Tag::kOther;
  int binary = 0;
  int boolean = 0;
  int isolation = 0;
};

// Computes the kernel, tests it against the one exceptional 3x3 class, and
// otherwise searches its 4x4 submatrices for a copy of the 4-cycle
// circulant; the tag determines the predicted triple, which callers
// cross-check against the exact solvers.  Throws std::invalid_argument
// unless real_rank(m) == 3.
Rank3Classification classify_rank3(const BinaryMatrix& m);

}  // namespace matrank
