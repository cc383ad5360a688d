#pragma once

#include <string>
#include <vector>

#include "fairfront/core.hpp"
#include "fairfront/rational.hpp"

namespace fairfront {

// k x l matrix of per-cluster attribute counts. Row i = cluster i.
struct Pattern {
  int k = 0;
  int l = 0;
  std::vector<int> counts;  // row-major, counts[i * l + a]

  Pattern() = default;
  Pattern(int k_, int l_) : k(k_), l(l_), counts(k_ * l_, 0) {}

  int& at(int i, int a) { return counts[i * l + a]; }
  int at(int i, int a) const { return counts[i * l + a]; }
  int cluster_size(int i) const;
  std::vector<int> column_sums() const;  // per-attribute totals n_a
  int nonempty_rows() const;

  bool operator==(const Pattern& o) const {
    return k == o.k && l == o.l && counts == o.counts;
  }
  bool operator<(const Pattern& o) const { return counts < o.counts; }
  std::string to_string() const;  // rows joined by ';', entries by ','
};

Pattern pattern_of(const Dataset& ds, const Assignment& asg, int k);

// Row i absorbs row j; row j becomes zero. i != j required.
Pattern merge_rows(const Pattern& p, int i, int j);

// Per-attribute proportional band [beta_a, alpha_a].
struct ProportionalBounds {
  std::vector<Rational> alpha;
  std::vector<Rational> beta;
};

// alpha_a = min(1, (1+delta) * n_a/n), beta_a = max(0, (1-delta) * n_a/n).
ProportionalBounds bounds_from_delta(const std::vector<int>& attr_counts,
                                     const Rational& delta);

// Smallest nonnegative widening of [beta, alpha] that admits count/size;
// zero-size clusters violate nothing.
Rational delta_violation(int count, int size, const Rational& alpha,
                         const Rational& beta);

enum class Objective {
  Balance,            // -min over nonempty clusters of min(c0/c1, c1/c0); l = 2
  GroupUtilitarian,   // sum_a max_i Delta
  GroupUtilitarianSum,// sum_a sum_i Delta
  GroupEgalitarian,   // max_{a,i} Delta
  GroupEgalitarianSum,// max_a sum_i Delta
  SumOfImbalances,    // sum_i |c_i0 - c_i1|; l = 2
  MaxImbalance,       // max_i |c_i0 - c_i1|; l = 2
  TauRatioShortfall,  // max_{i,a} max(0, tau * n_a - c_ia), all k clusters
};

const char* objective_name(Objective o);
Objective objective_from_name(const std::string& name);

// All objectives are minimized; Balance is negated to fit (display code
// re-negates it). "Mergeable" means merging two clusters never increases the
// value; that holds for every kind except MaxImbalance and TauRatioShortfall.
struct FairnessSpec {
  Objective kind = Objective::Balance;
  ProportionalBounds bounds;  // used by the four group objectives
  Rational tau{0};            // used by TauRatioShortfall

  bool mergeable() const;
};

Rational evaluate(const FairnessSpec& spec, const Pattern& p);

}  // namespace fairfront
