#include "fairfront/nonmergeable.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace fairfront {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

RefinementDag compute_modified_fairness(const DpTable& table, const FairnessSpec& spec) {
  int k = table.k;
  int l = table.l;
  std::uint64_t total = table.level_size[table.n];

  RefinementDag dag;
  dag.valid.assign(total, 0);
  dag.fhat.assign(total, Rational(0));
  dag.pointee.assign(total, 0);

  std::vector<std::vector<std::uint64_t>> by_nonempty(k + 1);
  for (std::uint64_t r = 0; r < total; ++r) {
    std::vector<int> dig = table.digits_of(r, table.n);
    if (!table.valid_digits(dig, table.n)) continue;
    dag.valid[r] = 1;
    by_nonempty[table.pattern_at(r).nonempty_rows()].push_back(r);
  }

  std::vector<int> dig((k - 1) * l);
  for (int rows = k; rows >= 0; --rows) {
    for (std::uint64_t r : by_nonempty[rows]) {
      Pattern p = table.pattern_at(r);
      dag.fhat[r] = evaluate(spec, p);
      dag.pointee[r] = r;
      if (rows >= k) continue;  // no zero row to split into

      for (int i = 0; i < k; ++i) {
        if (p.cluster_size(i) < 2) continue;
        for (int j = 0; j < k; ++j) {
          if (p.cluster_size(j) != 0) continue;
          // odometer over the part moved to row j: all proper nonzero
          // sub-vectors of row i
          std::vector<int> part(l, 0);
          while (true) {
            int t = l - 1;
            while (t >= 0 && part[t] == p.at(i, t)) {
              part[t] = 0;
              --t;
            }
            if (t < 0) break;
            part[t]++;
            bool full = true;
            for (int a = 0; a < l; ++a) {
              if (part[a] != p.at(i, a)) {
                full = false;
                break;
              }
            }
            if (full) continue;  // row i must keep something

            for (int i2 = 0; i2 < k - 1; ++i2) {
              for (int a = 0; a < l; ++a) dig[i2 * l + a] = p.at(i2, a);
            }
            if (i < k - 1) {
              for (int a = 0; a < l; ++a) dig[i * l + a] -= part[a];
            }
            if (j < k - 1) {
              for (int a = 0; a < l; ++a) dig[j * l + a] += part[a];
            }
            std::uint64_t r2 = table.rank_of(dig, table.n);
            if (dag.fhat[r2] < dag.fhat[r]) {
              dag.fhat[r] = dag.fhat[r2];
              dag.pointee[r] = dag.pointee[r2];
            }
          }
        }
      }
    }
  }
  return dag;
}

std::pair<Assignment, CenterSet> center_reassign(const Dataset& ds,
                                                 const CenterSet& centers,
                                                 const Assignment& coarse_asg,
                                                 const Pattern& coarse,
                                                 const Pattern& fine) {
  int k = coarse.k;
  int l = coarse.l;
  if (fine.k != k || fine.l != l || fine.column_sums() != coarse.column_sums()) {
    throw std::invalid_argument("patterns are not over the same dataset");
  }

  // parent[j] = coarse row that fine row j's points came from. A nonzero
  // coarse row must host itself; remaining fine rows fill the slack.
  std::vector<int> parent(k, -1);
  std::vector<std::vector<int>> remaining(k, std::vector<int>(l));
  std::vector<int> open;
  for (int i = 0; i < k; ++i) {
    for (int a = 0; a < l; ++a) remaining[i][a] = coarse.at(i, a);
  }
  for (int i = 0; i < k; ++i) {
    if (coarse.cluster_size(i) == 0) continue;
    if (fine.cluster_size(i) == 0) {
      throw std::invalid_argument("fine pattern is not a refinement (row vanished)");
    }
    parent[i] = i;
    for (int a = 0; a < l; ++a) {
      remaining[i][a] -= fine.at(i, a);
      if (remaining[i][a] < 0) {
        throw std::invalid_argument("fine pattern is not a refinement");
      }
    }
  }
  for (int j = 0; j < k; ++j) {
    if (parent[j] == -1 && fine.cluster_size(j) > 0) open.push_back(j);
  }

  std::vector<int> chosen(open.size(), -1);
  auto fits = [&](int j, int i) {
    for (int a = 0; a < l; ++a) {
      if (fine.at(j, a) > remaining[i][a]) return false;
    }
    return true;
  };
  auto search = [&](auto&& self, std::size_t idx) -> bool {
    if (idx == open.size()) {
      for (int i = 0; i < k; ++i) {
        for (int a = 0; a < l; ++a) {
          if (remaining[i][a] != 0) return false;
        }
      }
      return true;
    }
    int j = open[idx];
    for (int i = 0; i < k; ++i) {
      if (coarse.cluster_size(i) == 0 || !fits(j, i)) continue;
      for (int a = 0; a < l; ++a) remaining[i][a] -= fine.at(j, a);
      chosen[idx] = i;
      if (self(self, idx + 1)) return true;
      for (int a = 0; a < l; ++a) remaining[i][a] += fine.at(j, a);
      chosen[idx] = -1;
    }
    return false;
  };
  if (!search(search, 0)) {
    throw std::invalid_argument("fine pattern is not a refinement of the coarse one");
  }
  for (std::size_t t = 0; t < open.size(); ++t) parent[open[t]] = chosen[t];

  // fine rows ordered per parent, the parent row itself first
  std::vector<std::vector<int>> children(k);
  for (int i = 0; i < k; ++i) {
    if (parent[i] == i) children[i].push_back(i);
  }
  for (int j = 0; j < k; ++j) {
    if (parent[j] >= 0 && parent[j] != j) children[parent[j]].push_back(j);
  }

  Assignment out;
  out.cluster_of.assign(ds.n(), -1);
  std::vector<std::vector<int>> filled(k, std::vector<int>(l, 0));
  for (int idx = 0; idx < ds.n(); ++idx) {
    int i = coarse_asg.cluster_of[idx];
    int a = ds.attrs[idx];
    int target = -1;
    for (int j : children[i]) {
      if (filled[j][a] < fine.at(j, a)) {
        target = j;
        break;
      }
    }
    if (target < 0) throw std::logic_error("coarse assignment does not match its pattern");
    filled[target][a]++;
    out.cluster_of[idx] = target;
  }

  CenterSet cs = centers;
  for (int j = 0; j < k; ++j) {
    if (parent[j] >= 0 && parent[j] != j) cs.centers[j] = centers.centers[parent[j]];
  }
  return {std::move(out), std::move(cs)};
}

ParetoFront nonmergeable_pareto(const Dataset& ds, const CenterSet& centers,
                                const CostSpec& cost, const FairnessSpec& fairness,
                                const AssignmentParetoOptions& opts) {
  DpOptions dopts{opts.order, opts.budget};
  DpTable tab = dp_build(ds, centers, cost, dopts);
  RefinementDag dag = compute_modified_fairness(tab, fairness);

  std::vector<ParetoCandidate> cands;
  for (std::uint64_t r = 0; r < tab.level_size[tab.n]; ++r) {
    if (!dag.valid[r] || !(tab.final_cost[r] < kInf)) continue;
    cands.push_back({tab.final_cost[r], dag.fhat[r], r});
  }
  std::vector<std::size_t> keep = pareto_filter(cands);

  CostSpec sum_spec = cost;
  sum_spec.aggregate = CostSpec::Aggregate::SumOfPowers;
  ParetoFront front;
  front.objective = fairness.kind;
  front.p = cost.p;
  for (std::size_t i : keep) {
    std::uint64_t r = cands[i].tag;
    Pattern coarse = tab.pattern_at(r);
    Assignment asg = reconstruct(tab, coarse);
    FrontEntry e;
    e.fairness = cands[i].fairness;
    if (dag.pointee[r] == r) {
      e.pattern = coarse;
      e.asg = std::move(asg);
      e.centers = centers;
    } else {
      Pattern fine = tab.pattern_at(dag.pointee[r]);
      auto [fine_asg, fine_centers] = center_reassign(ds, centers, asg, coarse, fine);
      e.pattern = fine;
      e.asg = std::move(fine_asg);
      e.centers = std::move(fine_centers);
    }
    e.cost = assignment_cost(ds, e.centers, e.asg, sum_spec);
    front.entries.push_back(std::move(e));
  }
  return front;
}

}  // namespace fairfront
