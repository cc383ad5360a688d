#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fairfront/matching.hpp"
#include "fairfront/nonmergeable.hpp"
#include "fairfront/oracle.hpp"
#include "fairfront/run.hpp"
#include "fairfront/seeding.hpp"

namespace py = pybind11;
using namespace fairfront;

namespace {

FairnessSpec make_fairness(const Dataset& ds, const std::string& objective,
                           const std::string& delta, const std::string& tau) {
  FairnessSpec spec;
  spec.kind = objective_from_name(objective);
  spec.bounds = bounds_from_delta(ds.attr_counts(), parse_rational(delta));
  spec.tau = parse_rational(tau);
  return spec;
}

py::list pattern_rows(const Pattern& p) {
  py::list rows;
  for (int i = 0; i < p.k; ++i) {
    py::list row;
    for (int a = 0; a < p.l; ++a) row.append(p.at(i, a));
    rows.append(row);
  }
  return rows;
}

}  // namespace

PYBIND11_MODULE(_fairfront, m) {
  m.doc() = "Pareto fronts for fair clustering assignment problems";

  py::register_exception<ConfigError>(m, "ConfigError");
  py::register_exception<BudgetError>(m, "BudgetError");
  py::register_exception<ParseError>(m, "ParseError");

  py::class_<Rational>(m, "Rational")
      .def(py::init<std::int64_t>(), py::arg("num"))
      .def(py::init<std::int64_t, std::int64_t>(), py::arg("num"), py::arg("den"))
      .def_property_readonly("num", &Rational::num)
      .def_property_readonly("den", &Rational::den)
      .def("__float__", &Rational::to_double)
      .def("__eq__", [](const Rational& a, const Rational& b) { return a == b; })
      .def("__lt__", [](const Rational& a, const Rational& b) { return a < b; })
      .def("__le__", [](const Rational& a, const Rational& b) { return a <= b; })
      .def("__str__", &Rational::to_string)
      .def("__repr__", [](const Rational& r) {
        return "Rational(" + r.to_string() + ")";
      });

  py::class_<Dataset>(m, "Dataset")
      .def_readonly("points", &Dataset::points)
      .def_readonly("attrs", &Dataset::attrs)
      .def_readonly("attr_values", &Dataset::attr_values)
      .def("n", &Dataset::n)
      .def("dim", &Dataset::dim)
      .def("l", &Dataset::l)
      .def("attr_counts", &Dataset::attr_counts);

  py::class_<CenterSet>(m, "CenterSet")
      .def(py::init<>())
      .def_readwrite("centers", &CenterSet::centers)
      .def("k", &CenterSet::k);

  py::class_<Assignment>(m, "Assignment")
      .def_readonly("cluster_of", &Assignment::cluster_of);

  py::class_<Pattern>(m, "Pattern")
      .def_readonly("k", &Pattern::k)
      .def_readonly("l", &Pattern::l)
      .def_readonly("counts", &Pattern::counts)
      .def_property_readonly("rows", &pattern_rows)
      .def("__str__", &Pattern::to_string);

  py::enum_<Objective>(m, "Objective")
      .value("Balance", Objective::Balance)
      .value("GroupUtilitarian", Objective::GroupUtilitarian)
      .value("GroupUtilitarianSum", Objective::GroupUtilitarianSum)
      .value("GroupEgalitarian", Objective::GroupEgalitarian)
      .value("GroupEgalitarianSum", Objective::GroupEgalitarianSum)
      .value("SumOfImbalances", Objective::SumOfImbalances)
      .value("MaxImbalance", Objective::MaxImbalance)
      .value("TauRatioShortfall", Objective::TauRatioShortfall);

  py::class_<FrontEntry>(m, "FrontEntry")
      .def_readonly("cost", &FrontEntry::cost)
      .def_readonly("fairness", &FrontEntry::fairness)
      .def_readonly("pattern", &FrontEntry::pattern)
      .def_readonly("assignment", &FrontEntry::asg)
      .def_readonly("centers", &FrontEntry::centers);

  py::class_<ParetoFront>(m, "ParetoFront")
      .def_readonly("objective", &ParetoFront::objective)
      .def_readonly("p", &ParetoFront::p)
      .def_readonly("entries", &ParetoFront::entries)
      .def("__len__", [](const ParetoFront& f) { return f.entries.size(); });

  py::class_<ClusterResult>(m, "ClusterResult")
      .def_readonly("centers", &ClusterResult::centers)
      .def_readonly("assignment", &ClusterResult::asg)
      .def_readonly("cost", &ClusterResult::cost)
      .def_readonly("cost_trace", &ClusterResult::cost_trace);

  m.def("load_csv", &load_csv, py::arg("path"), py::arg("features"),
        py::arg("attr"));
  m.def("gen_gaussian", &gen_gaussian, py::arg("n"), py::arg("blobs"),
        py::arg("proportions"), py::arg("seed"));
  m.def("gen_bad_example", &gen_bad_example, py::arg("m"), py::arg("eps"));
  m.def(
      "pattern_count_estimate",
      [](const Dataset& ds, int k) {
        return pattern_count_estimate(ds.attr_counts(), k);
      },
      py::arg("ds"), py::arg("k"));
  m.def("kmeanspp_seed", &kmeanspp_seed, py::arg("ds"), py::arg("k"),
        py::arg("seed"));
  m.def(
      "vanilla_cluster",
      [](const Dataset& ds, int k, const std::string& p, std::uint64_t seed,
         int lloyd_iters) {
        CostSpec cost{parse_p(p), CostSpec::Aggregate::SumOfPowers};
        int iters = lloyd_iters >= 0 ? lloyd_iters : (cost.p == 2 ? 20 : 0);
        return vanilla_cluster(ds, k, cost, seed, iters);
      },
      py::arg("ds"), py::arg("k"), py::arg("p") = "2", py::arg("seed") = 1,
      py::arg("lloyd_iters") = -1);
  m.def(
      "solve",
      [](const Dataset& ds, const CenterSet& centers, const std::string& p,
         const std::string& objective, const std::string& delta,
         const std::string& tau, const std::string& algorithm,
         std::uint64_t budget, int threads, bool allow_raw) {
        CostSpec cost{parse_p(p), CostSpec::Aggregate::SumOfPowers};
        FairnessSpec fairness = make_fairness(ds, objective, delta, tau);
        if (algorithm == "brute") {
          return brute_force_pareto(ds, centers, cost, fairness, budget);
        }
        if (algorithm == "matching") {
          return imbalance_pareto(ds, centers, cost, fairness, threads);
        }
        AssignmentParetoOptions opts;
        opts.budget = budget;
        opts.allow_raw = allow_raw;
        if (algorithm == "dp-modified") {
          return nonmergeable_pareto(ds, centers, cost, fairness, opts);
        }
        if (algorithm == "dp") {
          return assignment_pareto(ds, centers, cost, fairness, opts);
        }
        throw ConfigError("unknown algorithm '" + algorithm + "'");
      },
      py::arg("ds"), py::arg("centers"), py::arg("p") = "2",
      py::arg("objective") = "balance", py::arg("delta") = "1/5",
      py::arg("tau") = "0", py::arg("algorithm") = "dp",
      py::arg("budget") = kDefaultPatternBudget, py::arg("threads") = 1,
      py::arg("allow_raw") = false);

  py::class_<RunConfig>(m, "RunConfig")
      .def(py::init<>())
      .def_readwrite("input", &RunConfig::input)
      .def_readwrite("features", &RunConfig::features)
      .def_readwrite("attr_col", &RunConfig::attr_col)
      .def_readwrite("k", &RunConfig::k)
      .def_readwrite("p", &RunConfig::p)
      .def_readwrite("objective", &RunConfig::objective)
      .def_readwrite("delta", &RunConfig::delta)
      .def_readwrite("tau", &RunConfig::tau)
      .def_readwrite("algorithm", &RunConfig::algorithm)
      .def_readwrite("seed", &RunConfig::seed)
      .def_readwrite("lloyd_iters", &RunConfig::lloyd_iters)
      .def_readwrite("recenters", &RunConfig::recenters)
      .def_readwrite("centers_file", &RunConfig::centers_file)
      .def_readwrite("out_front", &RunConfig::out_front)
      .def_readwrite("out_json", &RunConfig::out_json)
      .def_readwrite("out_svg", &RunConfig::out_svg)
      .def_readwrite("threads", &RunConfig::threads)
      .def_readwrite("budget", &RunConfig::budget)
      .def_readwrite("timings", &RunConfig::timings);

  py::class_<RunResult>(m, "RunResult")
      .def_readonly("front", &RunResult::front)
      .def_readonly("centers", &RunResult::centers)
      .def_readonly("recentered", &RunResult::recentered)
      .def_readonly("raw_mode", &RunResult::raw_mode)
      .def_readonly("wall_seconds", &RunResult::wall_seconds);

  m.def("run", &run, py::arg("config"));
}
