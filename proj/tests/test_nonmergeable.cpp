#include <doctest.h>

#include <limits>

#include "fairfront/nonmergeable.hpp"
#include "fairfront/oracle.hpp"
#include "fairfront/seeding.hpp"
#include "test_util.hpp"

using namespace fairfront;

namespace {

// Independent refinement check: `fine` refines `coarse` when no nonzero
// coarse row vanishes and some row map phi (enumerated exhaustively, with
// nonzero coarse rows hosting themselves) reproduces every coarse row as the
// sum of the fine rows mapped to it.
bool refines_oracle(const Pattern& fine, const Pattern& coarse) {
  int k = coarse.k;
  int l = coarse.l;
  for (int i = 0; i < k; ++i) {
    if (coarse.cluster_size(i) > 0 && fine.cluster_size(i) == 0) return false;
  }
  std::vector<int> nz;
  for (int j = 0; j < k; ++j) {
    if (fine.cluster_size(j) > 0) nz.push_back(j);
  }
  std::vector<int> phi(nz.size(), 0);
  while (true) {
    bool ok = true;
    for (std::size_t t = 0; t < nz.size() && ok; ++t) {
      if (coarse.cluster_size(nz[t]) > 0 && phi[t] != nz[t]) ok = false;
    }
    if (ok) {
      std::vector<std::vector<int>> sum(k, std::vector<int>(l, 0));
      for (std::size_t t = 0; t < nz.size(); ++t) {
        for (int a = 0; a < l; ++a) sum[phi[t]][a] += fine.at(nz[t], a);
      }
      for (int i = 0; i < k && ok; ++i) {
        for (int a = 0; a < l && ok; ++a) {
          if (sum[i][a] != coarse.at(i, a)) ok = false;
        }
      }
      if (ok) return true;
    }
    std::size_t t = 0;
    while (t < nz.size() && phi[t] == k - 1) {
      phi[t] = 0;
      ++t;
    }
    if (t == nz.size()) break;
    phi[t]++;
  }
  return false;
}

Pattern make_pattern(int k, int l, std::vector<int> counts) {
  Pattern p(k, l);
  p.counts = std::move(counts);
  return p;
}

}  // namespace

TEST_CASE("modified fairness equals the exhaustive refinement minimum") {
  SplitMix64 rng(61);
  Dataset ds = testutil::random_dataset(rng, 6, 2);
  ds.attrs = {0, 0, 0, 1, 1, 1};
  CenterSet cs = testutil::random_centers(rng, 3);
  DpTable tab = dp_build(ds, cs, {2, CostSpec::Aggregate::SumOfPowers});

  std::vector<std::uint64_t> valid_ranks;
  for (std::uint64_t r = 0; r < tab.level_size[tab.n]; ++r) {
    if (tab.valid_digits(tab.digits_of(r, tab.n), tab.n)) valid_ranks.push_back(r);
  }
  REQUIRE(valid_ranks.size() == 100);  // C(5,2)^2 placements of 3+3 items in 3 rows

  FairnessSpec specs[] = {
      testutil::make_spec(Objective::MaxImbalance, ds, Rational(1, 5), Rational(0)),
      testutil::make_spec(Objective::TauRatioShortfall, ds, Rational(1, 5),
                          Rational(1, 3)),
  };
  for (const FairnessSpec& spec : specs) {
    RefinementDag dag = compute_modified_fairness(tab, spec);
    for (std::uint64_t r : valid_ranks) {
      CHECK(dag.valid[r] == 1);
      Pattern coarse = tab.pattern_at(r);
      Rational best = evaluate(spec, coarse);
      for (std::uint64_t q : valid_ranks) {
        Pattern fine = tab.pattern_at(q);
        if (refines_oracle(fine, coarse)) best = rat_min(best, evaluate(spec, fine));
      }
      CHECK(dag.fhat[r] == best);
      Pattern realized = tab.pattern_at(dag.pointee[r]);
      CHECK(refines_oracle(realized, coarse));
      CHECK(evaluate(spec, realized) == dag.fhat[r]);
    }
  }

  FairnessSpec mergeable =
      testutil::make_spec(Objective::GroupEgalitarian, ds, Rational(1, 5), Rational(0));
  RefinementDag dag = compute_modified_fairness(tab, mergeable);
  for (std::uint64_t r : valid_ranks) {
    CHECK(dag.fhat[r] == evaluate(mergeable, tab.pattern_at(r)));
    CHECK(dag.pointee[r] == r);
  }
}

TEST_CASE("splitting repairs the merge witness") {
  Dataset ds;
  ds.attr_values = {"a", "b"};
  ds.attrs = {0, 0, 1, 1, 1, 1};
  for (int i = 0; i < 6; ++i) ds.points.push_back({0.0});
  CenterSet cs;
  cs.centers = {{0.0}, {100.0}};
  DpTable tab = dp_build(ds, cs, {2, CostSpec::Aggregate::SumOfPowers});

  FairnessSpec spec;
  spec.kind = Objective::MaxImbalance;
  RefinementDag dag = compute_modified_fairness(tab, spec);

  std::uint64_t all_in_one = tab.rank_of_pattern(make_pattern(2, 2, {2, 4, 0, 0}));
  CHECK(evaluate(spec, tab.pattern_at(all_in_one)) == Rational(2));
  CHECK(dag.fhat[all_in_one] == Rational(1));

  std::uint64_t split = tab.rank_of_pattern(make_pattern(2, 2, {1, 2, 1, 2}));
  CHECK(dag.fhat[split] == Rational(1));
  CHECK(dag.pointee[split] == split);

  FairnessSpec tau_spec;
  tau_spec.kind = Objective::TauRatioShortfall;
  tau_spec.tau = Rational(1, 2);
  RefinementDag tau_dag = compute_modified_fairness(tab, tau_spec);
  CHECK(evaluate(tau_spec, tab.pattern_at(all_in_one)) == Rational(2));
  CHECK(tau_dag.fhat[all_in_one] == Rational(0));
}

TEST_CASE("center_reassign splits a cluster in place") {
  Dataset ds;
  ds.attr_values = {"a", "b"};
  ds.attrs = {0, 0, 1, 1, 1, 1};
  for (int i = 0; i < 6; ++i) ds.points.push_back({static_cast<double>(i)});
  CenterSet cs;
  cs.centers = {{2.5}, {100.0}};
  Assignment coarse_asg;
  coarse_asg.cluster_of = {0, 0, 0, 0, 0, 0};
  Pattern coarse = make_pattern(2, 2, {2, 4, 0, 0});
  Pattern fine = make_pattern(2, 2, {1, 2, 1, 2});

  auto [asg, out_cs] = center_reassign(ds, cs, coarse_asg, coarse, fine);
  CHECK(asg.cluster_of == std::vector<int>{0, 1, 0, 0, 1, 1});
  CHECK(out_cs.centers[0] == cs.centers[0]);
  CHECK(out_cs.centers[1] == cs.centers[0]);  // duplicated parent center

  CostSpec spec{2, CostSpec::Aggregate::SumOfPowers};
  CHECK(assignment_cost(ds, out_cs, asg, spec) ==
        assignment_cost(ds, cs, coarse_asg, spec));

  Pattern wrong_sums = make_pattern(2, 2, {2, 2, 0, 1});
  CHECK_THROWS_AS(center_reassign(ds, cs, coarse_asg, coarse, wrong_sums),
                  std::invalid_argument);
  Pattern shape(3, 2);
  CHECK_THROWS_AS(center_reassign(ds, cs, coarse_asg, coarse, shape),
                  std::invalid_argument);
  // moving everything off a nonzero row is a permutation, not a refinement
  Pattern vanished = make_pattern(2, 2, {0, 0, 2, 4});
  CHECK_THROWS_AS(center_reassign(ds, cs, coarse_asg, coarse, vanished),
                  std::invalid_argument);

  Assignment spread;
  spread.cluster_of = {0, 1, 0, 0, 1, 1};
  Pattern spread_pat = make_pattern(2, 2, {1, 2, 1, 2});
  Pattern merged = make_pattern(2, 2, {2, 4, 0, 0});
  CHECK_THROWS_AS(center_reassign(ds, cs, spread, spread_pat, merged),
                  std::invalid_argument);
}

TEST_CASE("center_reassign preserves cost on random splits") {
  SplitMix64 rng(77);
  CostSpec spec{2, CostSpec::Aggregate::SumOfPowers};
  int performed = 0;
  for (int trial = 0; trial < 40; ++trial) {
    Dataset ds = testutil::random_dataset(rng, 8, 2);
    CenterSet cs = testutil::random_centers(rng, 3);
    DpTable tab = dp_build(ds, cs, spec);

    std::vector<std::uint64_t> ranks;
    for (std::uint64_t r = 0; r < tab.level_size[tab.n]; ++r) {
      if (!tab.valid_digits(tab.digits_of(r, tab.n), tab.n)) continue;
      Pattern p = tab.pattern_at(r);
      if (p.nonempty_rows() < tab.k) ranks.push_back(r);
    }
    if (ranks.empty()) continue;
    std::uint64_t r = ranks[rng.next_below(ranks.size())];
    Pattern coarse = tab.pattern_at(r);

    int src = -1, dst = -1;
    for (int i = 0; i < coarse.k; ++i) {
      if (coarse.cluster_size(i) >= 2 && src < 0) src = i;
      if (coarse.cluster_size(i) == 0) dst = i;
    }
    if (src < 0 || dst < 0) continue;
    Pattern fine = coarse;
    while (true) {
      bool some = false, all = true;
      for (int a = 0; a < coarse.l; ++a) {
        int part = static_cast<int>(rng.next_below(coarse.at(src, a) + 1));
        fine.at(src, a) = coarse.at(src, a) - part;
        fine.at(dst, a) = part;
        if (part > 0) some = true;
        if (part < coarse.at(src, a)) all = false;
      }
      if (some && !all) break;
    }

    Assignment coarse_asg = reconstruct(tab, coarse);
    auto [asg, out_cs] = center_reassign(ds, cs, coarse_asg, coarse, fine);
    CHECK(pattern_of(ds, asg, tab.k).counts == fine.counts);
    CHECK(assignment_cost(ds, out_cs, asg, spec) ==
          assignment_cost(ds, cs, coarse_asg, spec));
    CHECK(out_cs.centers[dst] == cs.centers[src]);
    ++performed;
  }
  CHECK(performed >= 20);
}

TEST_CASE("nonmergeable_pareto reduces to the plain front on mergeable kinds") {
  SplitMix64 rng(88);
  Dataset ds = testutil::random_dataset(rng, 8, 2);
  CenterSet cs = testutil::random_centers(rng, 3);
  CostSpec spec{2, CostSpec::Aggregate::SumOfPowers};
  FairnessSpec fair =
      testutil::make_spec(Objective::GroupUtilitarianSum, ds, Rational(1, 4), Rational(0));
  ParetoFront mod = nonmergeable_pareto(ds, cs, spec, fair);
  ParetoFront plain = assignment_pareto(ds, cs, spec, fair);
  REQUIRE(mod.entries.size() == plain.entries.size());
  for (std::size_t i = 0; i < mod.entries.size(); ++i) {
    CHECK(testutil::close(mod.entries[i].cost, plain.entries[i].cost));
    CHECK(mod.entries[i].fairness == plain.entries[i].fairness);
    CHECK(mod.entries[i].pattern.counts == plain.entries[i].pattern.counts);
  }
}

TEST_CASE("nonmergeable_pareto carries consistent refined entries") {
  Dataset ds;
  ds.attr_values = {"a", "b"};
  ds.attrs = {0, 0, 1, 1, 1, 1};
  for (int i = 0; i < 6; ++i) ds.points.push_back({0.0});
  CenterSet cs;
  cs.centers = {{0.0}, {100.0}};
  CostSpec spec{2, CostSpec::Aggregate::SumOfPowers};
  FairnessSpec fair;
  fair.kind = Objective::MaxImbalance;

  ParetoFront front = nonmergeable_pareto(ds, cs, spec, fair);
  REQUIRE(front.entries.size() == 1);
  const FrontEntry& e = front.entries[0];
  CHECK(e.cost == 0.0);
  CHECK(e.fairness == Rational(1));
  CHECK(evaluate(fair, e.pattern) == Rational(1));
  CHECK(pattern_of(ds, e.asg, 2).counts == e.pattern.counts);
  CHECK(e.centers.centers[0] == e.centers.centers[1]);  // split duplicates the center
  CHECK(assignment_cost(ds, e.centers, e.asg, spec) == 0.0);
}

TEST_CASE("modified front covers the raw front") {
  SplitMix64 rng(99);
  for (int trial = 0; trial < 5; ++trial) {
    Dataset ds = testutil::random_dataset(rng, 8, 2);
    CenterSet cs = testutil::random_centers(rng, 3);
    CostSpec spec{trial % 2 ? 1 : 2, CostSpec::Aggregate::SumOfPowers};
    FairnessSpec fair;
    fair.kind = trial % 2 ? Objective::TauRatioShortfall : Objective::MaxImbalance;
    fair.tau = trial % 2 ? Rational(1, 4) : Rational(0);

    ParetoFront mod = nonmergeable_pareto(ds, cs, spec, fair);
    AssignmentParetoOptions raw_opts;
    raw_opts.allow_raw = true;
    ParetoFront raw = assignment_pareto(ds, cs, spec, fair, raw_opts);
    CHECK(check_w_approx(mod, raw, 1.0, Rational(1), false));
    for (const FrontEntry& e : mod.entries) {
      const CenterSet& used = e.centers.centers.empty() ? cs : e.centers;
      CHECK(testutil::close(e.cost, assignment_cost(ds, used, e.asg, spec)));
    }
  }
}
