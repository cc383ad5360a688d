#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fairfront/pattern_dp.hpp"

namespace fairfront {

// "1", "2", or "inf" -> the CostSpec exponent.
int parse_p(const std::string& text);
std::string p_name(int p);

// One solver invocation, end to end: load, seed or load centers, solve,
// optionally recenter, and write any requested artifacts. Everything the CLI
// exposes funnels through here so library callers get the same behavior.
struct RunConfig {
  std::string input;
  std::vector<std::string> features;
  std::string attr_col;
  int k = 2;
  int p = 2;
  std::string objective = "balance";
  std::string delta = "1/5";
  std::string tau = "0";
  std::string algorithm = "dp";  // dp | dp-modified | matching | brute
  std::uint64_t seed = 1;
  int lloyd_iters = -1;  // -1 = default (20 for p=2, 0 otherwise)
  bool recenters = false;
  std::string centers_file;  // skip seeding, read centers from this CSV
  std::string out_front;     // front CSV (+ assignments sidecar)
  std::string out_json;
  std::string out_svg;
  int threads = 1;
  std::uint64_t budget = kDefaultPatternBudget;
  bool timings = false;  // include wall time in the JSON artifact
};

struct RunResult {
  ParetoFront front;
  CenterSet centers;  // the shared centers the run solved against
  std::vector<std::pair<double, double>> recentered;  // per entry, (sum, rooted)
  bool raw_mode = false;  // dp was forced onto a non-mergeable objective
  double wall_seconds = 0.0;
};

RunResult run(const RunConfig& cfg);

}  // namespace fairfront
