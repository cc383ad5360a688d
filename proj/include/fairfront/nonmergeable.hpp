#pragma once

#include <utility>

#include "fairfront/pattern_dp.hpp"

namespace fairfront {

// Modified fairness over the refinement DAG of the full pattern set (all
// final-level keys with the dataset's column sums). An edge runs from a
// coarser pattern to each pattern obtained by splitting one nonzero row into
// two nonzero parts, the second part landing on a zero row. fhat[r] is the
// minimum plain fairness over the pattern and everything it refines into;
// pointee[r] is the rank realizing it (the pattern itself wins ties, so
// mergeable objectives keep fhat == f and pointee == self).
struct RefinementDag {
  std::vector<char> valid;            // rank is a pattern (implied row >= 0)
  std::vector<Rational> fhat;
  std::vector<std::uint64_t> pointee;
};

RefinementDag compute_modified_fairness(const DpTable& table, const FairnessSpec& spec);

// Splits the clusters of `coarse_asg` (whose pattern is `coarse`) according to
// the refinement `fine`, duplicating each parent's center onto the rows it
// splits into. Every point keeps its center coordinates, so the cost is
// preserved bit for bit. Points move to fine rows in index order within each
// (cluster, attribute) bucket.
std::pair<Assignment, CenterSet> center_reassign(const Dataset& ds,
                                                 const CenterSet& centers,
                                                 const Assignment& coarse_asg,
                                                 const Pattern& coarse,
                                                 const Pattern& fine);

// Pareto front over (cost, modified fairness). Each entry carries the refined
// pattern, its assignment, and the (possibly duplicated) centers. For a
// mergeable objective this reduces to assignment_pareto.
ParetoFront nonmergeable_pareto(const Dataset& ds, const CenterSet& centers,
                                const CostSpec& cost, const FairnessSpec& fairness,
                                const AssignmentParetoOptions& opts = {});

}  // namespace fairfront
