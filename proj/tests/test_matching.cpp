#include <doctest.h>

#include <functional>
#include <optional>

#include "fairfront/matching.hpp"
#include "fairfront/seeding.hpp"
#include "test_util.hpp"

using namespace fairfront;

namespace {

Dataset line_dataset() {
  Dataset ds;
  ds.points = {{0.0}, {10.0}};
  ds.attrs = {0, 1};
  ds.attr_values = {"a", "b"};
  return ds;
}

CenterSet line_centers() {
  CenterSet cs;
  cs.centers = {{0.0}, {10.0}};
  return cs;
}

MatchGraph plain_graph(int nodes, std::vector<MatchGraph::Edge> edges) {
  MatchGraph g;
  g.nodes = nodes;
  g.n_data = nodes;
  g.edges = std::move(edges);
  return g;
}

// Exhaustive minimum-weight perfect matching by branching on the first
// unmatched node; nullopt when no perfect matching exists.
std::optional<double> brute_pm(const MatchGraph& g) {
  std::vector<std::vector<double>> w(g.nodes, std::vector<double>(g.nodes, -1.0));
  for (const auto& e : g.edges) w[e.u][e.v] = w[e.v][e.u] = e.w;
  std::vector<int> mate(g.nodes, -1);
  std::optional<double> best;
  std::function<void(int, double)> rec = [&](int u, double acc) {
    while (u < g.nodes && mate[u] != -1) ++u;
    if (u == g.nodes) {
      if (!best || acc < *best) best = acc;
      return;
    }
    for (int v = u + 1; v < g.nodes; ++v) {
      if (mate[v] != -1 || w[u][v] < 0.0) continue;
      mate[u] = v;
      mate[v] = u;
      rec(u + 1, acc + w[u][v]);
      mate[u] = -1;
      mate[v] = -1;
    }
  };
  rec(0, 0.0);
  return best;
}

void check_fronts_match(const ParetoFront& got, const ParetoFront& want) {
  REQUIRE(got.entries.size() == want.entries.size());
  for (std::size_t i = 0; i < got.entries.size(); ++i) {
    CHECK(testutil::close(got.entries[i].cost, want.entries[i].cost));
    CHECK(got.entries[i].fairness == want.entries[i].fairness);
  }
}

}  // namespace

TEST_CASE("build_graph_sum layout") {
  SplitMix64 rng(7);
  Dataset ds = testutil::random_dataset(rng, 4, 2);
  ds.attrs = {0, 0, 1, 1};
  CenterSet cs = testutil::random_centers(rng, 2);
  CostSpec spec{2, CostSpec::Aggregate::SumOfPowers};

  CHECK_THROWS_AS(build_graph_sum(ds, cs, spec, 1), ConfigError);
  CHECK_THROWS_AS(build_graph_sum(ds, cs, spec, -2), ConfigError);
  CHECK_THROWS_AS(build_graph_sum(ds, cs, {kPInf, CostSpec::Aggregate::SumOfPowers}, 0),
                  ConfigError);

  MatchGraph g0 = build_graph_sum(ds, cs, spec, 0);
  CHECK(g0.nodes == 4);
  CHECK(g0.n_data == 4);
  CHECK(g0.edges.size() == 4);  // cross-attribute pairs only
  for (const auto& e : g0.edges) {
    CHECK(ds.attrs[e.u] != ds.attrs[e.v]);
    CHECK(e.cluster >= 0);
    double direct = std::min(
        point_cost(ds.points[e.u], cs.centers[0], spec) +
            point_cost(ds.points[e.v], cs.centers[0], spec),
        point_cost(ds.points[e.u], cs.centers[1], spec) +
            point_cost(ds.points[e.v], cs.centers[1], spec));
    CHECK(testutil::close(e.w, direct));
  }

  MatchGraph g2 = build_graph_sum(ds, cs, spec, 2);
  CHECK(g2.nodes == 6);
  int data_dummy = 0;
  for (const auto& e : g2.edges) {
    bool du = e.u >= 4, dv = e.v >= 4;
    CHECK(!(du && dv));  // no dummy-dummy edges in the sum graph
    if (du || dv) {
      ++data_dummy;
      int x = du ? e.v : e.u;
      double best = std::min(point_cost(ds.points[x], cs.centers[0], spec),
                             point_cost(ds.points[x], cs.centers[1], spec));
      CHECK(testutil::close(e.w, best));
    }
  }
  CHECK(data_dummy == 8);
}

TEST_CASE("build_graph_max layout") {
  SplitMix64 rng(8);
  Dataset ds = testutil::random_dataset(rng, 4, 2);
  ds.attrs = {0, 1, 0, 1};
  CenterSet cs = testutil::random_centers(rng, 2);
  CostSpec spec{1, CostSpec::Aggregate::SumOfPowers};

  MatchGraph g = build_graph_max(ds, cs, spec, 1);
  CHECK(g.nodes == 6);  // 4 data + 2 typed dummies, parity already even
  int data_dummy = 0, dummy_dummy = 0;
  for (const auto& e : g.edges) {
    bool du = e.u >= 4, dv = e.v >= 4;
    if (du && dv) {
      ++dummy_dummy;
      CHECK(e.w == 0.0);
      CHECK(e.cluster == -1);
    } else if (du || dv) {
      ++data_dummy;
      int x = du ? e.v : e.u;
      int dummy = du ? e.u : e.v;
      int group = dummy - 4;  // F = 1, so dummy index equals its group
      CHECK(e.cluster == group);
      CHECK(testutil::close(e.w, point_cost(ds.points[x], cs.centers[group], spec)));
    }
  }
  CHECK(data_dummy == 8);
  CHECK(dummy_dummy == 1);

  // k = 1, F = 1 makes n + kF odd, so a parity dummy joins.
  CenterSet one;
  one.centers = {cs.centers[0]};
  MatchGraph gp = build_graph_max(ds, one, spec, 1);
  CHECK(gp.nodes == 6);
  int edges_at_parity = 0;
  for (const auto& e : gp.edges) {
    if (e.u == 5 || e.v == 5) {
      ++edges_at_parity;
      CHECK(e.cluster == -1);  // the parity dummy only pairs with dummies
    }
  }
  CHECK(edges_at_parity == 1);

  CHECK_THROWS_AS(build_graph_max(ds, cs, spec, -1), ConfigError);
}

TEST_CASE("perfect matching hand instances") {
  MatchGraph path = plain_graph(
      4, {{0, 1, 1.0, 0}, {1, 2, 10.0, 0}, {2, 3, 1.0, 0}});
  MatchingResult r = min_weight_perfect_matching(path);
  REQUIRE(r.feasible);
  CHECK(r.weight == 2.0);
  CHECK(r.mate[0] == 1);
  CHECK(r.mate[2] == 3);

  MatchGraph square = plain_graph(
      4, {{0, 1, 1.0, 0}, {1, 2, 9.0, 0}, {2, 3, 1.0, 0}, {3, 0, 9.0, 0}});
  r = min_weight_perfect_matching(square);
  REQUIRE(r.feasible);
  CHECK(r.weight == 2.0);

  // The greedy pair (0,1) at weight 0 blocks the only perfect matching; the
  // solver must take the two weight-5 edges instead.
  MatchGraph trap = plain_graph(
      4, {{0, 1, 0.0, 0}, {0, 2, 5.0, 0}, {1, 3, 5.0, 0}});
  r = min_weight_perfect_matching(trap);
  REQUIRE(r.feasible);
  CHECK(r.weight == 10.0);

  MatchGraph odd = plain_graph(3, {{0, 1, 1.0, 0}, {1, 2, 1.0, 0}});
  CHECK(!min_weight_perfect_matching(odd).feasible);

  MatchGraph isolated = plain_graph(4, {{0, 1, 1.0, 0}});
  r = min_weight_perfect_matching(isolated);
  CHECK(!r.feasible);
  CHECK(r.mate[2] == -1);

  MatchGraph zero = plain_graph(2, {{0, 1, 0.0, 0}});
  r = min_weight_perfect_matching(zero);
  REQUIRE(r.feasible);
  CHECK(r.weight == 0.0);

  CHECK_THROWS_AS(min_weight_perfect_matching(plain_graph(2, {{0, 1, -1.0, 0}})),
                  std::invalid_argument);
  CHECK_THROWS_AS(min_weight_perfect_matching(plain_graph(802, {})), BudgetError);
}

TEST_CASE("perfect matching agrees with exhaustive search") {
  SplitMix64 rng(99);
  int feasible_seen = 0, infeasible_seen = 0;
  for (int nodes : {4, 6, 8}) {
    for (int trial = 0; trial < 20; ++trial) {
      MatchGraph g;
      g.nodes = nodes;
      g.n_data = nodes;
      for (int u = 0; u < nodes; ++u) {
        for (int v = u + 1; v < nodes; ++v) {
          if (rng.next_double() < 0.55) {
            g.edges.push_back({u, v, rng.next_double() * 10.0, 0});
          }
        }
      }
      std::optional<double> want = brute_pm(g);
      MatchingResult got = min_weight_perfect_matching(g);
      CHECK(got.feasible == want.has_value());
      if (want) {
        CHECK(testutil::close(got.weight, *want));
        ++feasible_seen;
      } else {
        ++infeasible_seen;
      }
    }
  }
  CHECK(feasible_seen > 10);
  CHECK(infeasible_seen > 5);
}

TEST_CASE("clustering_from_matching decodes typed edges") {
  Dataset ds = line_dataset();
  CenterSet cs = line_centers();
  CostSpec spec{1, CostSpec::Aggregate::SumOfPowers};
  MatchGraph g = build_graph_sum(ds, cs, spec, 0);
  MatchingResult r = min_weight_perfect_matching(g);
  REQUIRE(r.feasible);
  Assignment asg = clustering_from_matching(g, r.mate);
  REQUIRE(asg.cluster_of.size() == 2);
  CHECK(asg.cluster_of[0] == asg.cluster_of[1]);  // the pair shares one cluster

  std::vector<int> unmatched = {-1, -1};
  CHECK_THROWS_AS(clustering_from_matching(g, unmatched), std::logic_error);

  MatchGraph untyped = plain_graph(2, {{0, 1, 0.0, -1}});
  std::vector<int> mate = {1, 0};
  CHECK_THROWS_AS(clustering_from_matching(untyped, mate), std::logic_error);
}

TEST_CASE("imbalance_pareto matches the assignment dp") {
  SplitMix64 rng(123);
  for (int trial = 0; trial < 6; ++trial) {
    Dataset ds = testutil::random_dataset(rng, 10, 2);
    CenterSet cs = testutil::random_centers(rng, 2 + trial % 2);
    CostSpec spec{trial % 2 ? 1 : 2, CostSpec::Aggregate::SumOfPowers};

    FairnessSpec sum_fair;
    sum_fair.kind = Objective::SumOfImbalances;
    check_fronts_match(imbalance_pareto(ds, cs, spec, sum_fair),
                       assignment_pareto(ds, cs, spec, sum_fair));

    FairnessSpec max_fair;
    max_fair.kind = Objective::MaxImbalance;
    AssignmentParetoOptions raw;
    raw.allow_raw = true;
    check_fronts_match(imbalance_pareto(ds, cs, spec, max_fair),
                       assignment_pareto(ds, cs, spec, max_fair, raw));
  }
}

TEST_CASE("imbalance_pareto is thread count independent") {
  SplitMix64 rng(321);
  Dataset ds = testutil::random_dataset(rng, 9, 2);
  CenterSet cs = testutil::random_centers(rng, 3);
  CostSpec spec{2, CostSpec::Aggregate::SumOfPowers};
  FairnessSpec fair;
  fair.kind = Objective::SumOfImbalances;
  ParetoFront a = imbalance_pareto(ds, cs, spec, fair, 1);
  ParetoFront b = imbalance_pareto(ds, cs, spec, fair, 3);
  REQUIRE(a.entries.size() == b.entries.size());
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    CHECK(a.entries[i].cost == b.entries[i].cost);  // bitwise: same work per level
    CHECK(a.entries[i].fairness == b.entries[i].fairness);
    CHECK(a.entries[i].asg.cluster_of == b.entries[i].asg.cluster_of);
  }
}

TEST_CASE("imbalance_pareto degenerate and invalid inputs") {
  SplitMix64 rng(55);
  Dataset ds = testutil::random_dataset(rng, 6, 2);
  for (auto& a : ds.attrs) a = 0;  // one group empty
  CenterSet cs = testutil::random_centers(rng, 2);
  CostSpec spec{2, CostSpec::Aggregate::SumOfPowers};
  FairnessSpec fair;
  fair.kind = Objective::SumOfImbalances;
  ParetoFront f = imbalance_pareto(ds, cs, spec, fair);
  REQUIRE(f.entries.size() == 1);
  // every point sits in its cheapest cluster
  double best = 0.0;
  for (int i = 0; i < ds.n(); ++i) {
    best += std::min(point_cost(ds.points[i], cs.centers[0], spec),
                     point_cost(ds.points[i], cs.centers[1], spec));
  }
  CHECK(testutil::close(f.entries[0].cost, best));

  FairnessSpec bad;
  bad.kind = Objective::Balance;
  CHECK_THROWS_AS(imbalance_pareto(ds, cs, spec, bad), ConfigError);
}
