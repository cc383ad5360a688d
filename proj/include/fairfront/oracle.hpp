#pragma once

#include <cstdint>
#include <utility>

#include "fairfront/pattern_dp.hpp"

namespace fairfront {

// Enumerates all k^n assignments (depth-first, point 0 outermost, clusters
// ascending) and keeps the cheapest assignment per pattern, so costs are
// summed in point-index order exactly like the DP. Refuses to start when
// k^n exceeds the budget.
ParetoFront brute_force_pareto(const Dataset& ds, const CenterSet& centers,
                               const CostSpec& cost, const FairnessSpec& fairness,
                               std::uint64_t budget = 1'000'000);

// Minimum cost of any assignment realizing the pattern: one independent
// transportation problem per attribute value, solved by successive shortest
// paths. Pattern column sums must match the dataset.
double transportation_optimum(const Dataset& ds, const CenterSet& centers,
                              const CostSpec& cost, const Pattern& pattern);

// True when every target entry is covered by some approx entry with
// cost <= w_cost * cost(target) and fairness <= w_fair * fairness(target).
// Entries with negative target fairness (Balance) fall back to absolute
// dominance on the fairness axis. Costs compare in the rooted (p-norm)
// convention when use_pnorm is set.
bool check_w_approx(const ParetoFront& approx, const ParetoFront& target,
                    double w_cost, const Rational& w_fair, bool use_pnorm = true);

// Adversarial two-group instance on 8m points around the unit cross, with its
// four canonical centers. Requires 0 < eps < 1/(8m).
std::pair<Dataset, CenterSet> gen_bad_example(int m, double eps);

// Mixture of unit-variance isotropic blobs on a radius-10 circle; blob and
// attribute draws come from one splitmix64 stream, so instances are
// reproducible per seed. Proportions must sum to 1.
Dataset gen_gaussian(int n, int k_blobs, const std::vector<double>& proportions,
                     std::uint64_t seed);

}  // namespace fairfront
