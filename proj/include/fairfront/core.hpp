#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace fairfront {

// Error taxonomy; the CLI maps these onto exit codes (config 2, budget 3,
// parse 4, anything else 5).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Points with one categorical attribute each. Attribute values are mapped to
// indices 0..l-1 in order of first appearance in the source.
struct Dataset {
  std::vector<std::vector<double>> points;  // n x d
  std::vector<int> attrs;                   // n, values in [0, l)
  std::vector<std::string> attr_values;     // l, display names

  int n() const { return static_cast<int>(points.size()); }
  int dim() const { return points.empty() ? 0 : static_cast<int>(points[0].size()); }
  int l() const { return static_cast<int>(attr_values.size()); }
  // Per-attribute totals n_a.
  std::vector<int> attr_counts() const;
};

struct CenterSet {
  std::vector<std::vector<double>> centers;  // k x d
  int k() const { return static_cast<int>(centers.size()); }
};

inline constexpr int kPInf = -1;

// Exponent p in {1, 2, kPInf} plus the aggregate convention. SumOfPowers adds
// d(x,s)^p over points; PNorm reports the p-th root of that sum (identical for
// p=1). For p = infinity both conventions are the max distance.
struct CostSpec {
  int p = 2;
  enum class Aggregate { SumOfPowers, PNorm };
  Aggregate aggregate = Aggregate::SumOfPowers;
};

struct Assignment {
  std::vector<int> cluster_of;  // n, values in [0, k)
};

// d(x, s) is always the Euclidean distance; p only controls the exponent.
double point_cost(const std::vector<double>& x, const std::vector<double>& s,
                  const CostSpec& spec);

// Sums point costs in point-index order (bit-reproducible for a fixed
// assignment), then applies the aggregate convention.
double assignment_cost(const Dataset& ds, const CenterSet& centers,
                       const Assignment& asg, const CostSpec& spec);

// p=2: per-cluster centroid. p=1: coordinate-wise median (even-sized clusters
// take the midpoint of the two middle values). Empty clusters keep their
// previous center. p = infinity is rejected.
CenterSet recompute_centers(const Dataset& ds, const Assignment& asg,
                            const CenterSet& previous, const CostSpec& spec);

// Strict comma-separated parser: first row is the header, '.' decimals via
// from_chars, no quoting. Errors carry the 1-based row and the column name.
Dataset load_csv(const std::string& path,
                 const std::vector<std::string>& feature_cols,
                 const std::string& attr_col);

// Same format as load_csv but without an attribute column; one row per center.
CenterSet load_centers_csv(const std::string& path,
                           const std::vector<std::string>& feature_cols);

// Converts a sum-of-powers cost into the rooted convention (no-op for p=1 and
// p = infinity).
double pnorm_cost(double cost_sum, int p);

}  // namespace fairfront
