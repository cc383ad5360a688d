#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace fairfront::detail {

// Maximum-weight matching (not necessarily perfect) on a general undirected
// graph, primal-dual with blossom shrinking, O(V^3). Weights must be positive
// integers; absent pairs are non-edges. Nodes are 0-based; returns the mate
// array with -1 for unmatched nodes. Callers that need a *minimum-weight
// perfect* matching transform weights first (see matching.cpp).
std::vector<int> max_weight_matching(
    int n, const std::vector<std::array<long long, 3>>& edges);

}  // namespace fairfront::detail
