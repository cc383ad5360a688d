#pragma once

#include "fairfront/pattern_dp.hpp"

namespace fairfront {

// Matching formulation for the two imbalance objectives (l = 2 only). Data
// nodes are 0..n-1, dummies follow. A matched edge with cluster >= 0 sends its
// data endpoint(s) to that cluster.
struct MatchGraph {
  int nodes = 0;
  int n_data = 0;
  struct Edge {
    int u, v;
    double w;
    int cluster;  // -1 on dummy-dummy edges
  };
  std::vector<Edge> edges;
};

// Total-imbalance variant: F untyped dummies that each absorb one data point
// (so the matching leaves exactly F points unpaired across attributes).
// Cross-attribute data pairs cost min_i(d^p(x,s_i) + d^p(y,s_i)); data-dummy
// costs min_i d^p(x,s_i). F must have n's parity. No dummy-dummy edges.
MatchGraph build_graph_sum(const Dataset& ds, const CenterSet& centers,
                           const CostSpec& cost, int F);

// Max-imbalance variant: k typed dummy groups of F each; data-dummy edges to
// group i cost d^p(x,s_i), dummies pair with each other for free, and one
// parity dummy joins when n + kF is odd.
MatchGraph build_graph_max(const Dataset& ds, const CenterSet& centers,
                           const CostSpec& cost, int F);

struct MatchingResult {
  bool feasible = false;
  double weight = 0.0;       // sum of original edge weights, data-index order
  std::vector<int> mate;     // -1 when unmatched (only if infeasible)
};

// Exact minimum-weight perfect matching via the blossom solver on scaled
// integer weights (llround at 2^45 / max weight, then a big additive shift so
// maximum weight implies maximum cardinality).
MatchingResult min_weight_perfect_matching(const MatchGraph& g);

Assignment clustering_from_matching(const MatchGraph& g, const std::vector<int>& mate);

// Sweeps the imbalance level F (sum: |n0-n1|, step 2, up to n; max: 0 up to
// max(n0, n1)), solves one matching per level, and Pareto-filters the
// (cost, achieved fairness) candidates. With a degenerate group (n_a = 0) the
// front collapses to the single minimum-cost clustering. Levels solve in
// parallel across `threads`.
ParetoFront imbalance_pareto(const Dataset& ds, const CenterSet& centers,
                             const CostSpec& cost, const FairnessSpec& fairness,
                             int threads = 1);

}  // namespace fairfront
