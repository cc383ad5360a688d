#include <cstdint>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "fairfront/oracle.hpp"
#include "fairfront/report.hpp"
#include "fairfront/run.hpp"

namespace {

int default_threads() {
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

struct GaussianArgs {
  int n = 100;
  int blobs = 2;
  std::vector<double> proportions{0.5, 0.5};
  std::uint64_t seed = 1;
  std::string out;
};

struct BadExampleArgs {
  int m = 1;
  double eps = 0.0;  // 0 = pick 1/(16m)
  std::string out;
  std::string out_centers;
};

int dispatch(const fairfront::RunConfig* solve, const GaussianArgs* gauss,
             const BadExampleArgs* bad) {
  if (gauss) {
    fairfront::Dataset ds = fairfront::gen_gaussian(
        gauss->n, gauss->blobs, gauss->proportions, gauss->seed);
    fairfront::save_dataset_csv(ds, gauss->out);
    std::cout << "wrote " << ds.n() << " points to " << gauss->out << "\n";
    return 0;
  }
  if (bad) {
    double eps = bad->eps > 0 ? bad->eps : 1.0 / (16.0 * bad->m);
    auto [ds, centers] = fairfront::gen_bad_example(bad->m, eps);
    fairfront::save_dataset_csv(ds, bad->out);
    std::cout << "wrote " << ds.n() << " points to " << bad->out << "\n";
    if (!bad->out_centers.empty()) {
      fairfront::save_centers_csv(centers, bad->out_centers);
      std::cout << "wrote " << centers.k() << " centers to " << bad->out_centers
                << "\n";
    }
    return 0;
  }

  if (solve->input.empty()) throw fairfront::ConfigError("--input is required");
  if (solve->features.empty()) {
    throw fairfront::ConfigError("--features is required");
  }
  if (solve->attr_col.empty()) throw fairfront::ConfigError("--attr is required");

  fairfront::RunResult res = fairfront::run(*solve);
  if (res.raw_mode) {
    std::cerr << "note: '" << solve->objective
              << "' is not mergeable; dp computed the raw assignment-level "
                 "front. Use --algorithm dp-modified for the refined front.\n";
  }
  std::cout << "front entries: " << res.front.entries.size() << "\n";
  for (const auto& path : {solve->out_front, solve->out_json, solve->out_svg}) {
    if (!path.empty()) std::cout << "wrote " << path << "\n";
  }
  if (solve->timings) {
    std::cerr << "solve wall time: " << res.wall_seconds << " s\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pareto fronts for fair clustering assignment problems"};
  app.require_subcommand(0, 1);

  fairfront::RunConfig cfg;
  cfg.threads = default_threads();
  std::string p_text = "2";

  app.add_option("--input", cfg.input, "dataset CSV")->envname("FAIRFRONT_INPUT");
  app.add_option("--features", cfg.features, "feature column names")
      ->delimiter(',')
      ->envname("FAIRFRONT_FEATURES");
  app.add_option("--attr", cfg.attr_col, "sensitive attribute column")
      ->envname("FAIRFRONT_ATTR");
  app.add_option("--k", cfg.k, "number of clusters")->envname("FAIRFRONT_K");
  app.add_option("--p", p_text, "cost exponent: 1, 2, or inf")
      ->envname("FAIRFRONT_P");
  app.add_option("--objective", cfg.objective,
                 "balance | group-util | group-util-sum | group-egal | "
                 "group-egal-sum | sum-imbalance | max-imbalance | tau-ratio")
      ->envname("FAIRFRONT_OBJECTIVE");
  app.add_option("--delta", cfg.delta, "proportional slack (rational or decimal)")
      ->envname("FAIRFRONT_DELTA");
  app.add_option("--tau", cfg.tau, "tau-ratio quota (rational or decimal)")
      ->envname("FAIRFRONT_TAU");
  app.add_option("--algorithm", cfg.algorithm,
                 "dp | dp-modified | matching | brute")
      ->envname("FAIRFRONT_ALGORITHM");
  app.add_option("--seed", cfg.seed, "seeding RNG seed")->envname("FAIRFRONT_SEED");
  app.add_option("--lloyd-iters", cfg.lloyd_iters,
                 "Lloyd rounds after seeding (default 20 for p=2, else 0)")
      ->envname("FAIRFRONT_LLOYD_ITERS");
  app.add_flag("--recenters", cfg.recenters,
               "also report costs against per-entry recomputed centers")
      ->envname("FAIRFRONT_RECENTERS");
  app.add_option("--centers", cfg.centers_file,
                 "read centers from this CSV instead of seeding")
      ->envname("FAIRFRONT_CENTERS");
  app.add_option("--out-front", cfg.out_front, "front CSV path")
      ->envname("FAIRFRONT_OUT_FRONT");
  app.add_option("--out-json", cfg.out_json, "JSON artifact path")
      ->envname("FAIRFRONT_OUT_JSON");
  app.add_option("--out-svg", cfg.out_svg, "SVG plot path")
      ->envname("FAIRFRONT_OUT_SVG");
  app.add_option("--threads", cfg.threads, "matching-sweep parallelism")
      ->envname("FAIRFRONT_THREADS");
  app.add_option("--budget", cfg.budget, "pattern/assignment enumeration cap")
      ->envname("FAIRFRONT_BUDGET");
  app.add_flag("--timings", cfg.timings, "report wall time (also in JSON)")
      ->envname("FAIRFRONT_TIMINGS");

  CLI::App* gen = app.add_subcommand("gen", "emit synthetic CSV fixtures");
  gen->require_subcommand(1);

  GaussianArgs gauss;
  CLI::App* gen_gauss = gen->add_subcommand("gaussian", "isotropic blob mixture");
  gen_gauss->add_option("--n", gauss.n, "number of points")->required();
  gen_gauss->add_option("--blobs", gauss.blobs, "number of blobs");
  gen_gauss->add_option("--proportions", gauss.proportions,
                        "attribute proportions, must sum to 1")
      ->delimiter(',');
  gen_gauss->add_option("--seed", gauss.seed, "RNG seed");
  gen_gauss->add_option("--out", gauss.out, "output CSV")->required();

  BadExampleArgs bad;
  CLI::App* gen_bad = gen->add_subcommand("bad-example",
                                          "adversarial two-group cross instance");
  gen_bad->add_option("--m", bad.m, "size parameter (8m points)")->required();
  gen_bad->add_option("--eps", bad.eps, "perturbation, default 1/(16m)");
  gen_bad->add_option("--out", bad.out, "output CSV")->required();
  gen_bad->add_option("--out-centers", bad.out_centers,
                      "also write the four canonical centers");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    cfg.p = fairfront::parse_p(p_text);
    return dispatch(&cfg, gen_gauss->parsed() ? &gauss : nullptr,
                    gen_bad->parsed() ? &bad : nullptr);
  } catch (const fairfront::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const fairfront::BudgetError& e) {
    std::cerr << "budget refusal: " << e.what() << "\n";
    return 3;
  } catch (const fairfront::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 5;
  }
}
