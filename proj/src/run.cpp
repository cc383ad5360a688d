#include "fairfront/run.hpp"

#include <chrono>
#include <fstream>

#include <json.hpp>

#include "fairfront/matching.hpp"
#include "fairfront/nonmergeable.hpp"
#include "fairfront/oracle.hpp"
#include "fairfront/report.hpp"
#include "fairfront/seeding.hpp"

namespace fairfront {

int parse_p(const std::string& text) {
  if (text == "1") return 1;
  if (text == "2") return 2;
  if (text == "inf") return kPInf;
  throw ConfigError("p must be 1, 2, or inf (got '" + text + "')");
}

std::string p_name(int p) {
  if (p == kPInf) return "inf";
  return std::to_string(p);
}

namespace {

bool needs_bounds(Objective o) {
  return o == Objective::GroupUtilitarian || o == Objective::GroupUtilitarianSum ||
         o == Objective::GroupEgalitarian || o == Objective::GroupEgalitarianSum;
}

nlohmann::json json_matrix(const std::vector<std::vector<double>>& m) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& row : m) j.push_back(row);
  return j;
}

nlohmann::json json_pattern(const Pattern& p) {
  nlohmann::json j = nlohmann::json::array();
  for (int i = 0; i < p.k; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int a = 0; a < p.l; ++a) row.push_back(p.at(i, a));
    j.push_back(row);
  }
  return j;
}

void write_json(const RunConfig& cfg, const RunResult& res, const Dataset& ds) {
  nlohmann::json j;
  j["algorithm"] = cfg.algorithm;
  j["config"] = {
      {"delta", cfg.delta}, {"input", cfg.input},  {"k", cfg.k},
      {"objective", cfg.objective}, {"p", p_name(cfg.p)},
      {"seed", cfg.seed},   {"tau", cfg.tau},
  };
  j["n"] = ds.n();
  j["l"] = ds.l();
  j["attr_values"] = ds.attr_values;
  j["centers"] = json_matrix(res.centers.centers);
  nlohmann::json entries = nlohmann::json::array();
  for (std::size_t i = 0; i < res.front.entries.size(); ++i) {
    const FrontEntry& e = res.front.entries[i];
    nlohmann::json je;
    je["index"] = i;
    je["cost_sum_of_powers"] = e.cost;
    je["cost_p_norm"] = pnorm_cost(e.cost, res.front.p);
    je["fairness_raw"] = e.fairness.to_string();
    je["fairness_display"] = fairness_display(res.front, e.fairness);
    je["pattern"] = json_pattern(e.pattern);
    je["assignment"] = e.asg.cluster_of;
    if (!e.centers.centers.empty()) je["centers"] = json_matrix(e.centers.centers);
    if (!res.recentered.empty()) {
      je["cost_recentered_sum_of_powers"] = res.recentered[i].first;
      je["cost_recentered_p_norm"] = res.recentered[i].second;
    }
    entries.push_back(std::move(je));
  }
  j["entries"] = std::move(entries);
  if (cfg.timings) j["timings"] = {{"wall_seconds", res.wall_seconds}};

  std::ofstream out(cfg.out_json);
  if (!out) throw ConfigError("cannot write " + cfg.out_json);
  out << j.dump(2) << "\n";
}

}  // namespace

RunResult run(const RunConfig& cfg) {
  if (cfg.k < 1) throw ConfigError("k must be at least 1");
  if (cfg.threads < 1) throw ConfigError("threads must be at least 1");
  if (cfg.p != 1 && cfg.p != 2 && cfg.p != kPInf) {
    throw ConfigError("p must be 1, 2, or inf");
  }
  if (cfg.algorithm != "dp" && cfg.algorithm != "dp-modified" &&
      cfg.algorithm != "matching" && cfg.algorithm != "brute") {
    throw ConfigError("unknown algorithm '" + cfg.algorithm + "'");
  }
  if (cfg.p == kPInf && cfg.algorithm != "brute") {
    throw ConfigError("p=inf costs are not additive; only --algorithm brute supports them");
  }

  Objective kind = objective_from_name(cfg.objective);
  Rational delta = parse_rational(cfg.delta);
  Rational tau = parse_rational(cfg.tau);
  if (delta < Rational(0)) throw ConfigError("delta must be nonnegative");
  if (tau < Rational(0) || tau > Rational(1)) {
    throw ConfigError("tau must lie in [0, 1]");
  }

  Dataset ds = load_csv(cfg.input, cfg.features, cfg.attr_col);
  CostSpec cost{cfg.p, CostSpec::Aggregate::SumOfPowers};

  RunResult res;
  if (!cfg.centers_file.empty()) {
    res.centers = load_centers_csv(cfg.centers_file, cfg.features);
    if (res.centers.k() != cfg.k) {
      throw ConfigError(cfg.centers_file + ": expected " + std::to_string(cfg.k) +
                        " centers, found " + std::to_string(res.centers.k()));
    }
  } else {
    int iters = cfg.lloyd_iters >= 0 ? cfg.lloyd_iters : (cfg.p == 2 ? 20 : 0);
    res.centers = vanilla_cluster(ds, cfg.k, cost, cfg.seed, iters).centers;
  }

  FairnessSpec fairness;
  fairness.kind = kind;
  if (needs_bounds(kind)) {
    fairness.bounds = bounds_from_delta(ds.attr_counts(), delta);
  }
  fairness.tau = tau;

  auto t0 = std::chrono::steady_clock::now();
  if (cfg.algorithm == "brute") {
    res.front = brute_force_pareto(ds, res.centers, cost, fairness, cfg.budget);
  } else if (cfg.algorithm == "matching") {
    res.front = imbalance_pareto(ds, res.centers, cost, fairness, cfg.threads);
  } else if (cfg.algorithm == "dp-modified") {
    AssignmentParetoOptions opts;
    opts.budget = cfg.budget;
    res.front = nonmergeable_pareto(ds, res.centers, cost, fairness, opts);
  } else {
    AssignmentParetoOptions opts;
    opts.budget = cfg.budget;
    if (!fairness.mergeable()) {
      opts.allow_raw = true;
      res.raw_mode = true;
    }
    res.front = assignment_pareto(ds, res.centers, cost, fairness, opts);
  }
  auto t1 = std::chrono::steady_clock::now();
  res.wall_seconds = std::chrono::duration<double>(t1 - t0).count();

  if (cfg.recenters) {
    if (cfg.p != 1 && cfg.p != 2) {
      throw ConfigError("--recenters requires p in {1, 2}");
    }
    for (const FrontEntry& e : res.front.entries) {
      const CenterSet& base = e.centers.centers.empty() ? res.centers : e.centers;
      CenterSet improved = recompute_centers(ds, e.asg, base, cost);
      double sum = assignment_cost(ds, improved, e.asg, cost);
      res.recentered.emplace_back(sum, pnorm_cost(sum, cfg.p));
    }
  }

  if (!cfg.out_front.empty()) {
    write_front_csv(res.front, cfg.recenters ? &res.recentered : nullptr,
                    cfg.out_front);
  }
  if (!cfg.out_json.empty()) write_json(cfg, res, ds);
  if (!cfg.out_svg.empty()) emit_svg(res.front, cfg.out_svg);
  return res;
}

}  // namespace fairfront
