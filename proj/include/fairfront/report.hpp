#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fairfront/pattern_dp.hpp"

namespace fairfront {

// Doubles are printed with to_chars (shortest exact round-trip), so reruns of
// the same configuration produce byte-identical files.
std::string format_double(double v);

// For Balance the displayed value is the balance itself (raw is negated).
double fairness_display(const ParetoFront& front, const Rational& raw);

// Front CSV: index, cost_sum_of_powers, cost_p_norm, fairness_raw,
// fairness_display, pattern (row-major, ';'-joined), assignment_file.
// With recentered costs two extra columns follow. Assignments go to a sidecar
// next to `path` (stem + "_assignments.csv") with columns entry,point,cluster.
void write_front_csv(const ParetoFront& front,
                     const std::vector<std::pair<double, double>>* recentered,
                     const std::string& path);

struct FrontCsvRow {
  int index = 0;
  double cost_sum_of_powers = 0.0;
  double cost_p_norm = 0.0;
  double fairness_raw = 0.0;
  double fairness_display = 0.0;
  std::vector<int> pattern;  // flattened row-major
  std::string assignment_file;
  std::optional<double> recentered_sum;
  std::optional<double> recentered_p_norm;
};

std::vector<FrontCsvRow> read_front_csv(const std::string& path);

// Step-line scatter of the front, rooted cost on x, displayed fairness on y.
// One <circle> per entry. Deterministic output, no timestamps.
void emit_svg(const ParetoFront& front, const std::string& path);

// Fixture writers, load_csv/load_centers_csv compatible. Feature columns are
// named x0..x{d-1}; the dataset writer appends a "group" column with the
// attribute's display value.
void save_dataset_csv(const Dataset& ds, const std::string& path);
void save_centers_csv(const CenterSet& cs, const std::string& path);

}  // namespace fairfront
