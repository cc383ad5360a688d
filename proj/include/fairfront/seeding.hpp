#pragma once

#include <cstdint>
#include <vector>

#include "fairfront/core.hpp"

namespace fairfront {

// splitmix64. Fixed summation/draw order makes every seeded run reproducible
// across platforms with IEEE doubles.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // [0, 1)
  double next_double() { return (next() >> 11) * 0x1.0p-53; }

  // [0, bound), multiply-shift
  std::uint64_t next_below(std::uint64_t bound) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * bound) >> 64);
  }
};

// k-means++ over data points: first center uniform, each subsequent one drawn
// proportionally to the squared distance to the nearest chosen center
// (regardless of p). Returns k distinct point indices' coordinates. If every
// remaining point coincides with a chosen center the draw falls back to
// uniform over unchosen indices.
CenterSet kmeanspp_seed(const Dataset& ds, int k, std::uint64_t seed);

struct ClusterResult {
  CenterSet centers;
  Assignment asg;
  double cost;
  std::vector<double> cost_trace;  // cost after seeding, then after each round
};

// k-means++ seeding followed by lloyd_iters rounds of Lloyd (p = 2 only;
// requesting rounds with any other p is an error). A cluster emptied by the
// assignment step is repaired by moving its center onto the point farthest
// from that point's current center (ties to the lowest index). Stops early
// when the assignment stabilizes. The trace never increases.
ClusterResult vanilla_cluster(const Dataset& ds, int k, const CostSpec& spec,
                              std::uint64_t seed, int lloyd_iters = 20);

}  // namespace fairfront
