#include "fairfront/pattern_dp.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace fairfront {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::uint8_t kNoBack = 255;

std::vector<std::uint64_t> strides_for(const std::vector<int>& cnt, int k, int l) {
  int digits = (k - 1) * l;
  std::vector<std::uint64_t> stride(digits, 1);
  for (int t = digits - 2; t >= 0; --t) {
    int a = (t + 1) % l;
    stride[t] = stride[t + 1] * static_cast<std::uint64_t>(cnt[a] + 1);
  }
  return stride;
}

}  // namespace

std::uint64_t pattern_count_estimate(const std::vector<int>& attr_counts, int k) {
  unsigned __int128 est = 1;
  for (int c : attr_counts) {
    for (int rep = 0; rep < k - 1; ++rep) {
      est *= static_cast<unsigned>(c + 1);
      if (est > UINT64_MAX) return UINT64_MAX;
    }
  }
  return static_cast<std::uint64_t>(est);
}

std::uint64_t DpTable::peak_level_keys() const {
  return *std::max_element(level_size.begin(), level_size.end());
}

std::vector<int> DpTable::digits_of(std::uint64_t rank, int level) const {
  int digits = (k - 1) * l;
  std::vector<int> dig(digits, 0);
  for (int t = digits - 1; t >= 0; --t) {
    std::uint64_t radix = static_cast<std::uint64_t>(cnt[level][t % l] + 1);
    dig[t] = static_cast<int>(rank % radix);
    rank /= radix;
  }
  return dig;
}

std::uint64_t DpTable::rank_of(const std::vector<int>& digits, int level) const {
  std::vector<std::uint64_t> stride = strides_for(cnt[level], k, l);
  std::uint64_t r = 0;
  for (std::size_t t = 0; t < digits.size(); ++t) {
    r += static_cast<std::uint64_t>(digits[t]) * stride[t];
  }
  return r;
}

bool DpTable::valid_digits(const std::vector<int>& digits, int level) const {
  for (int a = 0; a < l; ++a) {
    int sum = 0;
    for (int i = 0; i < k - 1; ++i) sum += digits[i * l + a];
    if (sum > cnt[level][a]) return false;
  }
  return true;
}

Pattern DpTable::pattern_at(std::uint64_t final_rank) const {
  std::vector<int> dig = digits_of(final_rank, n);
  Pattern p(k, l);
  for (int i = 0; i < k - 1; ++i) {
    for (int a = 0; a < l; ++a) p.at(i, a) = dig[i * l + a];
  }
  for (int a = 0; a < l; ++a) {
    int sum = 0;
    for (int i = 0; i < k - 1; ++i) sum += p.at(i, a);
    p.at(k - 1, a) = cnt[n][a] - sum;
  }
  return p;
}

std::uint64_t DpTable::rank_of_pattern(const Pattern& p) const {
  if (p.k != k || p.l != l) throw std::invalid_argument("pattern shape mismatch");
  std::vector<int> sums = p.column_sums();
  for (int a = 0; a < l; ++a) {
    if (sums[a] != cnt[n][a]) {
      throw std::invalid_argument("pattern column sums do not match the dataset");
    }
  }
  for (int v : p.counts) {
    if (v < 0) throw std::invalid_argument("negative pattern entry");
  }
  std::vector<int> dig((k - 1) * l);
  for (int i = 0; i < k - 1; ++i) {
    for (int a = 0; a < l; ++a) dig[i * l + a] = p.at(i, a);
  }
  return rank_of(dig, n);
}

DpTable dp_build(const Dataset& ds, const CenterSet& centers,
                 const CostSpec& cost, const DpOptions& opts) {
  if (cost.p == kPInf) {
    throw ConfigError("the pattern DP needs additive costs; p = infinity is not supported");
  }
  int n = ds.n();
  int k = centers.k();
  int l = ds.l();
  if (k < 1) throw ConfigError("need at least one center");

  DpTable tab;
  tab.k = k;
  tab.l = l;
  tab.n = n;
  tab.attrs = ds.attrs;
  tab.order = opts.order;
  if (tab.order.empty()) {
    tab.order.resize(n);
    std::iota(tab.order.begin(), tab.order.end(), 0);
  } else {
    std::vector<char> seen(n, 0);
    for (int v : tab.order) {
      if (v < 0 || v >= n || seen[v]) throw std::invalid_argument("order is not a permutation");
      seen[v] = 1;
    }
    if (static_cast<int>(tab.order.size()) != n) {
      throw std::invalid_argument("order is not a permutation");
    }
  }

  std::uint64_t estimate = pattern_count_estimate(ds.attr_counts(), k);
  if (estimate > opts.budget) {
    throw BudgetError("pattern budget exceeded: about " + std::to_string(estimate) +
                      " keys at the final level, budget " + std::to_string(opts.budget));
  }

  CostSpec sum_spec = cost;
  sum_spec.aggregate = CostSpec::Aggregate::SumOfPowers;
  std::vector<std::vector<double>> pc(n, std::vector<double>(k));
  for (int i = 0; i < n; ++i) {
    for (int c = 0; c < k; ++c) {
      pc[i][c] = point_cost(ds.points[i], centers.centers[c], sum_spec);
    }
  }

  tab.cnt.assign(n + 1, std::vector<int>(l, 0));
  for (int j = 1; j <= n; ++j) {
    tab.cnt[j] = tab.cnt[j - 1];
    tab.cnt[j][ds.attrs[tab.order[j - 1]]]++;
  }
  tab.level_size.assign(n + 1, 1);
  for (int j = 0; j <= n; ++j) {
    std::uint64_t s = 1;
    for (int a = 0; a < l; ++a) {
      for (int rep = 0; rep < k - 1; ++rep) s *= static_cast<std::uint64_t>(tab.cnt[j][a] + 1);
    }
    tab.level_size[j] = s;
  }

  tab.back.resize(n + 1);
  int ndig = (k - 1) * l;
  std::vector<double> prev(1, 0.0), curr;
  std::vector<int> dig(ndig);
  std::vector<int> sums(l);

  for (int j = 1; j <= n; ++j) {
    int point = tab.order[j - 1];
    int b = ds.attrs[point];
    std::uint64_t size_j = tab.level_size[j];
    curr.assign(size_j, kInf);
    tab.back[j].assign(size_j, kNoBack);

    std::vector<std::uint64_t> radix(ndig), stride_prev = strides_for(tab.cnt[j - 1], k, l);
    for (int t = 0; t < ndig; ++t) {
      radix[t] = static_cast<std::uint64_t>(tab.cnt[j][t % l] + 1);
    }
    const double* cpoint = pc[point].data();

    for (std::uint64_t r = 0; r < size_j; ++r) {
      std::uint64_t rest = r;
      for (int t = ndig - 1; t >= 0; --t) {
        dig[t] = static_cast<int>(rest % radix[t]);
        rest /= radix[t];
      }
      bool ok = true;
      for (int a = 0; a < l; ++a) {
        int s = 0;
        for (int i = 0; i < k - 1; ++i) s += dig[i * l + a];
        sums[a] = s;
        if (s > tab.cnt[j][a]) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;

      std::uint64_t prev_base = 0;
      for (int t = 0; t < ndig; ++t) {
        prev_base += static_cast<std::uint64_t>(dig[t]) * stride_prev[t];
      }

      double best = kInf;
      std::uint8_t best_i = kNoBack;
      for (int i = 0; i < k - 1; ++i) {
        if (dig[i * l + b] == 0) continue;
        double v = prev[prev_base - stride_prev[i * l + b]] + cpoint[i];
        if (v < best) {
          best = v;
          best_i = static_cast<std::uint8_t>(i);
        }
      }
      if (sums[b] <= tab.cnt[j][b] - 1) {
        double v = prev[prev_base] + cpoint[k - 1];
        if (v < best) {
          best = v;
          best_i = static_cast<std::uint8_t>(k - 1);
        }
      }
      curr[r] = best;
      tab.back[j][r] = best_i;
    }
    prev.swap(curr);
  }
  tab.final_cost = std::move(prev);
  return tab;
}

Assignment reconstruct(const DpTable& table, const Pattern& pattern) {
  std::uint64_t r = table.rank_of_pattern(pattern);
  if (!(table.final_cost[r] < kInf)) {
    throw std::logic_error("pattern is unreachable");
  }
  std::vector<int> dig = table.digits_of(r, table.n);
  Assignment asg;
  asg.cluster_of.assign(table.n, -1);
  for (int j = table.n; j >= 1; --j) {
    std::uint8_t i = table.back[j][r];
    if (i == kNoBack) throw std::logic_error("broken backpointer chain");
    int point = table.order[j - 1];
    asg.cluster_of[point] = i;
    if (i < table.k - 1) dig[i * table.l + table.attrs[point]] -= 1;
    r = table.rank_of(dig, j - 1);
  }
  return asg;
}

std::vector<std::size_t> pareto_filter(const std::vector<ParetoCandidate>& candidates) {
  std::vector<std::size_t> idx(candidates.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) {
    const auto& a = candidates[x];
    const auto& b = candidates[y];
    if (a.cost != b.cost) return a.cost < b.cost;
    if (a.fairness != b.fairness) return a.fairness < b.fairness;
    return a.tag < b.tag;
  });
  std::vector<std::size_t> keep;
  bool first = true;
  Rational best{0};
  for (std::size_t i : idx) {
    if (first || candidates[i].fairness < best) {
      keep.push_back(i);
      best = candidates[i].fairness;
      first = false;
    }
  }
  return keep;
}

ParetoFront assignment_pareto(const Dataset& ds, const CenterSet& centers,
                              const CostSpec& cost, const FairnessSpec& fairness,
                              const AssignmentParetoOptions& opts) {
  if (!fairness.mergeable() && !opts.allow_raw) {
    throw ConfigError(std::string(objective_name(fairness.kind)) +
                      " is not mergeable; use the modified front or opt into raw mode");
  }
  DpOptions dopts{opts.order, opts.budget};
  DpTable tab = dp_build(ds, centers, cost, dopts);

  std::vector<ParetoCandidate> cands;
  for (std::uint64_t r = 0; r < tab.level_size[tab.n]; ++r) {
    if (!(tab.final_cost[r] < kInf)) continue;
    Pattern p = tab.pattern_at(r);
    cands.push_back({tab.final_cost[r], evaluate(fairness, p), r});
  }
  std::vector<std::size_t> keep = pareto_filter(cands);

  CostSpec sum_spec = cost;
  sum_spec.aggregate = CostSpec::Aggregate::SumOfPowers;
  ParetoFront front;
  front.objective = fairness.kind;
  front.p = cost.p;
  for (std::size_t i : keep) {
    FrontEntry e;
    e.pattern = tab.pattern_at(cands[i].tag);
    e.fairness = cands[i].fairness;
    e.asg = reconstruct(tab, e.pattern);
    e.cost = assignment_cost(ds, centers, e.asg, sum_spec);
    front.entries.push_back(std::move(e));
  }
  return front;
}

}  // namespace fairfront
