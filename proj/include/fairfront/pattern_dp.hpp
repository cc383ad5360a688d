#pragma once

#include <cstdint>
#include <vector>

#include "fairfront/fairness.hpp"

namespace fairfront {

inline constexpr std::uint64_t kDefaultPatternBudget = 20'000'000;

// One Pareto-front entry. `centers` is empty when the entry uses the run's
// shared centers; the modified-front routine fills it per entry.
struct FrontEntry {
  double cost = 0.0;       // sum-of-powers (max distance for p = infinity)
  Rational fairness{0};    // minimization orientation (Balance is negated)
  Pattern pattern;
  Assignment asg;
  CenterSet centers;
};

struct ParetoFront {
  Objective objective = Objective::Balance;
  int p = 2;
  std::vector<FrontEntry> entries;  // increasing cost, strictly decreasing fairness
};

struct ParetoCandidate {
  double cost;
  Rational fairness;
  std::uint64_t tag;  // stable tie-break and caller payload
};

// Indices of non-dominated candidates, sorted by (cost, fairness, tag); one
// representative (the first in that order) survives per (cost, fairness).
std::vector<std::size_t> pareto_filter(const std::vector<ParetoCandidate>& candidates);

// Level-by-level table over prefix patterns. A level-j key is the flattened
// (k-1) x l count matrix of the first j points (processing order fixed at
// build time); the last row is implied by the per-attribute prefix totals.
// Keys are ranked by a mixed radix with per-digit radix cnt_j[a]+1, digit
// (0,0) most significant, so rank order equals lexicographic order and every
// level is a dense array. Only the final level's costs are kept; per-level
// backpointers are retained for reconstruction.
class DpTable {
 public:
  int k = 0;
  int l = 0;
  int n = 0;
  std::vector<int> order;                   // processing order (point indices)
  std::vector<int> attrs;                   // attribute per original point index
  std::vector<std::vector<int>> cnt;        // cnt[j][a], j in [0, n]
  std::vector<std::uint64_t> level_size;    // ranks per level, j in [0, n]
  std::vector<std::vector<std::uint8_t>> back;  // back[j], j in [1, n]
  std::vector<double> final_cost;           // level n, +inf where unreachable

  std::uint64_t peak_level_keys() const;

  // Digits are the (k-1) x l key, row-major.
  std::vector<int> digits_of(std::uint64_t rank, int level) const;
  std::uint64_t rank_of(const std::vector<int>& digits, int level) const;
  bool valid_digits(const std::vector<int>& digits, int level) const;

  Pattern pattern_at(std::uint64_t final_rank) const;
  std::uint64_t rank_of_pattern(const Pattern& p) const;
};

// Upper bound on the number of final-level keys: prod_a (n_a + 1)^(k-1).
// Saturates instead of overflowing.
std::uint64_t pattern_count_estimate(const std::vector<int>& attr_counts, int k);

struct DpOptions {
  std::vector<int> order;  // empty = identity
  std::uint64_t budget = kDefaultPatternBudget;
};

// Exact assignment-level DP. Rejects p = infinity (costs must be additive)
// and refuses to start when the pattern-count estimate exceeds the budget.
DpTable dp_build(const Dataset& ds, const CenterSet& centers,
                 const CostSpec& cost, const DpOptions& opts = {});

// Walks backpointers from a final pattern down to an assignment over the
// original point indices. The pattern must be reachable.
Assignment reconstruct(const DpTable& table, const Pattern& pattern);

struct AssignmentParetoOptions {
  std::vector<int> order;
  std::uint64_t budget = kDefaultPatternBudget;
  // Non-mergeable objectives are refused unless the caller opts into the raw
  // assignment-level front (the modified-front routine is the supported path).
  bool allow_raw = false;
};

// Pareto front over (cost, fairness) across all assignments: one optimal-cost
// representative per surviving pattern. Entry costs are recomputed from the
// reconstructed assignment in point-index order.
ParetoFront assignment_pareto(const Dataset& ds, const CenterSet& centers,
                              const CostSpec& cost, const FairnessSpec& fairness,
                              const AssignmentParetoOptions& opts = {});

}  // namespace fairfront
