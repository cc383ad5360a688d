#include "fairfront/seeding.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace fairfront {

namespace {

double sq_dist(const std::vector<double>& x, const std::vector<double>& y) {
  double s = 0.0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    double d = x[j] - y[j];
    s += d * d;
  }
  return s;
}

}  // namespace

CenterSet kmeanspp_seed(const Dataset& ds, int k, std::uint64_t seed) {
  int n = ds.n();
  if (k < 1 || k > n) throw ConfigError("k must be in [1, n]");
  SplitMix64 rng(seed);
  std::vector<int> chosen;
  std::vector<char> is_chosen(n, 0);
  std::vector<double> best_sq(n, std::numeric_limits<double>::infinity());

  int first = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
  chosen.push_back(first);
  is_chosen[first] = 1;

  while (static_cast<int>(chosen.size()) < k) {
    const auto& last = ds.points[chosen.back()];
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
      best_sq[i] = std::min(best_sq[i], sq_dist(ds.points[i], last));
      if (!is_chosen[i]) total += best_sq[i];
    }
    int pick = -1;
    if (total > 0.0) {
      double u = rng.next_double() * total;
      double acc = 0.0;
      for (int i = 0; i < n; ++i) {
        if (is_chosen[i]) continue;
        acc += best_sq[i];
        if (u < acc) {
          pick = i;
          break;
        }
      }
      if (pick < 0) {  // u landed on the rounding tail
        for (int i = n - 1; i >= 0; --i) {
          if (!is_chosen[i]) {
            pick = i;
            break;
          }
        }
      }
    } else {  // all remaining points coincide with chosen centers
      std::uint64_t r = rng.next_below(static_cast<std::uint64_t>(n - chosen.size()));
      for (int i = 0; i < n; ++i) {
        if (is_chosen[i]) continue;
        if (r == 0) {
          pick = i;
          break;
        }
        --r;
      }
    }
    chosen.push_back(pick);
    is_chosen[pick] = 1;
  }

  CenterSet cs;
  for (int i : chosen) cs.centers.push_back(ds.points[i]);
  return cs;
}

namespace {

Assignment nearest_assignment(const Dataset& ds, const CenterSet& cs) {
  Assignment asg;
  asg.cluster_of.resize(ds.n());
  for (int i = 0; i < ds.n(); ++i) {
    int best = 0;
    double best_d = sq_dist(ds.points[i], cs.centers[0]);
    for (int c = 1; c < cs.k(); ++c) {
      double d = sq_dist(ds.points[i], cs.centers[c]);
      if (d < best_d) {
        best_d = d;
        best = c;
      }
    }
    asg.cluster_of[i] = best;
  }
  return asg;
}

}  // namespace

ClusterResult vanilla_cluster(const Dataset& ds, int k, const CostSpec& spec,
                              std::uint64_t seed, int lloyd_iters) {
  if (lloyd_iters < 0) throw ConfigError("lloyd_iters must be nonnegative");
  if (lloyd_iters > 0 && spec.p != 2) {
    throw ConfigError("Lloyd refinement requires p = 2");
  }
  ClusterResult res;
  res.centers = kmeanspp_seed(ds, k, seed);
  res.asg = nearest_assignment(ds, res.centers);
  res.cost = assignment_cost(ds, res.centers, res.asg, spec);
  res.cost_trace.push_back(res.cost);

  for (int it = 0; it < lloyd_iters; ++it) {
    CenterSet updated = recompute_centers(ds, res.asg, res.centers, spec);
    std::vector<int> size(k, 0);
    for (int c : res.asg.cluster_of) size[c]++;
    std::vector<char> taken(ds.n(), 0);
    for (int c = 0; c < k; ++c) {
      if (size[c] > 0) continue;
      int far = -1;
      double far_d = -1.0;
      for (int i = 0; i < ds.n(); ++i) {
        if (taken[i]) continue;
        double d = sq_dist(ds.points[i], updated.centers[res.asg.cluster_of[i]]);
        if (d > far_d) {
          far_d = d;
          far = i;
        }
      }
      updated.centers[c] = ds.points[far];
      taken[far] = 1;
    }
    Assignment next = nearest_assignment(ds, updated);
    res.centers = std::move(updated);
    bool stable = next.cluster_of == res.asg.cluster_of;
    res.asg = std::move(next);
    res.cost = assignment_cost(ds, res.centers, res.asg, spec);
    res.cost_trace.push_back(res.cost);
    if (stable) break;
  }
  return res;
}

}  // namespace fairfront
