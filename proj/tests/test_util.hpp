#pragma once

#include <string>
#include <vector>

#include "fairfront/fairness.hpp"
#include "fairfront/seeding.hpp"

namespace testutil {

// Uniform points in [0, 10)^dim with random attributes. Every attribute value
// is represented in attr_values even if the draw never produces it.
inline fairfront::Dataset random_dataset(fairfront::SplitMix64& rng, int n,
                                         int l, int dim = 2) {
  fairfront::Dataset ds;
  for (int a = 0; a < l; ++a) {
    ds.attr_values.push_back(std::string(1, static_cast<char>('a' + a)));
  }
  for (int i = 0; i < n; ++i) {
    std::vector<double> pt;
    for (int d = 0; d < dim; ++d) pt.push_back(10.0 * rng.next_double());
    ds.points.push_back(std::move(pt));
    ds.attrs.push_back(static_cast<int>(rng.next_below(l)));
  }
  return ds;
}

inline fairfront::CenterSet random_centers(fairfront::SplitMix64& rng, int k,
                                           int dim = 2) {
  fairfront::CenterSet cs;
  for (int i = 0; i < k; ++i) {
    std::vector<double> c;
    for (int d = 0; d < dim; ++d) c.push_back(10.0 * rng.next_double());
    cs.centers.push_back(std::move(c));
  }
  return cs;
}

inline fairfront::FairnessSpec make_spec(fairfront::Objective kind,
                                         const fairfront::Dataset& ds,
                                         const fairfront::Rational& delta,
                                         const fairfront::Rational& tau) {
  fairfront::FairnessSpec spec;
  spec.kind = kind;
  spec.bounds = fairfront::bounds_from_delta(ds.attr_counts(), delta);
  spec.tau = tau;
  return spec;
}

inline bool close(double a, double b) {
  double diff = a < b ? b - a : a - b;
  double aa = a < 0 ? -a : a;
  double bb = b < 0 ? -b : b;
  double scale = 1.0;
  if (aa > scale) scale = aa;
  if (bb > scale) scale = bb;
  return diff <= 1e-9 * scale;
}

}  // namespace testutil
