#include "fairfront/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "fairfront/seeding.hpp"

namespace fairfront {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::uint64_t pow_u64_sat(std::uint64_t base, int exp) {
  unsigned __int128 v = 1;
  for (int i = 0; i < exp; ++i) {
    v *= base;
    if (v > UINT64_MAX) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(v);
}

}  // namespace

ParetoFront brute_force_pareto(const Dataset& ds, const CenterSet& centers,
                               const CostSpec& cost, const FairnessSpec& fairness,
                               std::uint64_t budget) {
  int n = ds.n();
  int k = centers.k();
  std::uint64_t leaves = pow_u64_sat(static_cast<std::uint64_t>(k), n);
  if (leaves > budget) {
    throw BudgetError("brute force budget exceeded: k^n is about " +
                      std::to_string(leaves) + ", budget " + std::to_string(budget));
  }

  CostSpec sum_spec = cost;
  sum_spec.aggregate = CostSpec::Aggregate::SumOfPowers;
  std::vector<std::vector<double>> pc(n, std::vector<double>(k));
  for (int i = 0; i < n; ++i) {
    for (int c = 0; c < k; ++c) {
      pc[i][c] = point_cost(ds.points[i], centers.centers[c], sum_spec);
    }
  }

  struct Best {
    double cost;
    std::vector<int> asg;
  };
  std::map<std::vector<int>, Best> best_by_pattern;

  std::vector<int> asg(n, 0);
  Pattern pat(k, ds.l());
  // prefix[j] = cost of the first j points; max for p = infinity
  std::vector<double> prefix(n + 1, 0.0);
  bool max_mode = cost.p == kPInf;

  int j = 0;
  while (true) {
    if (j == n) {
      double total = prefix[n];
      auto it = best_by_pattern.find(pat.counts);
      if (it == best_by_pattern.end()) {
        best_by_pattern.emplace(pat.counts, Best{total, asg});
      } else if (total < it->second.cost) {
        it->second = Best{total, asg};
      }
      --j;
      if (j < 0) break;
      pat.at(asg[j], ds.attrs[j])--;
      while (asg[j] == k - 1) {
        asg[j] = 0;
        --j;
        if (j < 0) break;
        pat.at(asg[j], ds.attrs[j])--;
      }
      if (j < 0) break;
      asg[j]++;
    }
    pat.at(asg[j], ds.attrs[j])++;
    prefix[j + 1] = max_mode ? std::max(prefix[j], pc[j][asg[j]])
                             : prefix[j] + pc[j][asg[j]];
    ++j;
  }

  std::vector<ParetoCandidate> cands;
  std::vector<const Best*> payload;
  std::vector<const std::vector<int>*> pat_of;
  for (const auto& [counts, best] : best_by_pattern) {
    Pattern p(k, ds.l());
    p.counts = counts;
    cands.push_back({best.cost, evaluate(fairness, p),
                     static_cast<std::uint64_t>(payload.size())});
    payload.push_back(&best);
    pat_of.push_back(&counts);
  }
  std::vector<std::size_t> keep = pareto_filter(cands);

  ParetoFront front;
  front.objective = fairness.kind;
  front.p = cost.p;
  for (std::size_t i : keep) {
    FrontEntry e;
    e.cost = cands[i].cost;
    e.fairness = cands[i].fairness;
    e.pattern = Pattern(k, ds.l());
    e.pattern.counts = *pat_of[cands[i].tag];
    e.asg.cluster_of = payload[cands[i].tag]->asg;
    front.entries.push_back(std::move(e));
  }
  return front;
}

namespace {

// Successive-shortest-path min-cost flow, small instances only.
class Mcmf {
 public:
  explicit Mcmf(int nodes) : head_(nodes, -1) {}

  void add_edge(int u, int v, int cap, double cost) {
    edges_.push_back({v, head_[u], cap, cost});
    head_[u] = static_cast<int>(edges_.size()) - 1;
    edges_.push_back({u, head_[v], 0, -cost});
    head_[v] = static_cast<int>(edges_.size()) - 1;
  }

  // Returns total cost of a maximum flow from s to t; flow amount via out.
  double run(int s, int t, int* flow_out) {
    int n = static_cast<int>(head_.size());
    double total = 0.0;
    int flow = 0;
    while (true) {
      std::vector<double> dist(n, kInf);
      std::vector<int> pre_edge(n, -1);
      std::vector<char> inq(n, 0);
      std::vector<int> queue;
      dist[s] = 0.0;
      queue.push_back(s);
      inq[s] = 1;
      for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        int u = queue[qi];
        inq[u] = 0;
        for (int e = head_[u]; e != -1; e = edges_[e].next) {
          if (edges_[e].cap <= 0) continue;
          int v = edges_[e].to;
          double nd = dist[u] + edges_[e].cost;
          if (nd < dist[v] - 1e-15) {
            dist[v] = nd;
            pre_edge[v] = e;
            if (!inq[v]) {
              inq[v] = 1;
              queue.push_back(v);
            }
          }
        }
      }
      if (!(dist[t] < kInf)) break;
      int push = INT32_MAX;
      for (int v = t; v != s;) {
        int e = pre_edge[v];
        push = std::min(push, edges_[e].cap);
        v = edges_[e ^ 1].to;
      }
      for (int v = t; v != s;) {
        int e = pre_edge[v];
        edges_[e].cap -= push;
        edges_[e ^ 1].cap += push;
        v = edges_[e ^ 1].to;
      }
      total += dist[t] * push;
      flow += push;
    }
    if (flow_out) *flow_out = flow;
    return total;
  }

 private:
  struct Edge {
    int to;
    int next;
    int cap;
    double cost;
  };
  std::vector<int> head_;
  std::vector<Edge> edges_;
};

}  // namespace

double transportation_optimum(const Dataset& ds, const CenterSet& centers,
                              const CostSpec& cost, const Pattern& pattern) {
  int n = ds.n();
  int k = centers.k();
  int l = ds.l();
  if (pattern.k != k || pattern.l != l) {
    throw std::invalid_argument("pattern shape mismatch");
  }
  std::vector<int> na = ds.attr_counts();
  std::vector<int> sums = pattern.column_sums();
  for (int a = 0; a < l; ++a) {
    if (sums[a] != na[a]) {
      throw std::invalid_argument("pattern column sums do not match the dataset");
    }
  }
  if (cost.p == kPInf) {
    throw ConfigError("transportation optimum needs additive costs");
  }

  CostSpec sum_spec = cost;
  sum_spec.aggregate = CostSpec::Aggregate::SumOfPowers;
  double total = 0.0;
  for (int a = 0; a < l; ++a) {
    std::vector<int> members;
    for (int i = 0; i < n; ++i) {
      if (ds.attrs[i] == a) members.push_back(i);
    }
    int m = static_cast<int>(members.size());
    if (m == 0) continue;
    // node layout: 0 = source, 1..m = points, m+1..m+k = clusters, m+k+1 = sink
    Mcmf flow(m + k + 2);
    int src = 0, snk = m + k + 1;
    for (int t = 0; t < m; ++t) {
      flow.add_edge(src, 1 + t, 1, 0.0);
      for (int c = 0; c < k; ++c) {
        flow.add_edge(1 + t, 1 + m + c,
                      1, point_cost(ds.points[members[t]], centers.centers[c], sum_spec));
      }
    }
    for (int c = 0; c < k; ++c) {
      flow.add_edge(1 + m + c, snk, pattern.at(c, a), 0.0);
    }
    int pushed = 0;
    total += flow.run(src, snk, &pushed);
    if (pushed != m) throw std::logic_error("transportation problem infeasible");
  }
  return total;
}

bool check_w_approx(const ParetoFront& approx, const ParetoFront& target,
                    double w_cost, const Rational& w_fair, bool use_pnorm) {
  auto rooted = [&](double c, int p) {
    if (!use_pnorm || p != 2) return c;
    return std::sqrt(c);
  };
  for (const FrontEntry& t : target.entries) {
    double tc = rooted(t.cost, target.p);
    bool covered = false;
    for (const FrontEntry& a : approx.entries) {
      double ac = rooted(a.cost, approx.p);
      bool cost_ok = ac <= w_cost * tc * (1.0 + 1e-9) + 1e-12;
      bool fair_ok = (t.fairness < Rational(0)) ? a.fairness <= t.fairness
                                                : a.fairness <= w_fair * t.fairness;
      if (cost_ok && fair_ok) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

std::pair<Dataset, CenterSet> gen_bad_example(int m, double eps) {
  if (m < 1) throw ConfigError("m must be positive");
  if (!(eps > 0.0) || !(eps < 1.0 / (8.0 * m))) {
    throw ConfigError("eps must lie in (0, 1/(8m))");
  }
  Dataset ds;
  ds.attr_values = {"blue", "red"};
  auto add = [&](int copies, double x, double y, int attr) {
    for (int i = 0; i < copies; ++i) {
      ds.points.push_back({x, y});
      ds.attrs.push_back(attr);
    }
  };
  int big = 2 * m - 1;
  add(big, -eps, 1.0, 0);
  add(big, eps, 1.0, 1);
  add(1, 1.0, 0.0, 0);
  add(1, 1.0, 0.0, 1);
  add(big, eps, -1.0, 0);
  add(big, -eps, -1.0, 1);
  add(1, -1.0, 0.0, 0);
  add(1, -1.0, 0.0, 1);

  CenterSet cs;
  cs.centers = {{0.0, 1.0}, {1.0, 0.0}, {0.0, -1.0}, {-1.0, 0.0}};
  return {std::move(ds), std::move(cs)};
}

Dataset gen_gaussian(int n, int k_blobs, const std::vector<double>& proportions,
                     std::uint64_t seed) {
  if (n < 1 || k_blobs < 1) throw ConfigError("n and k_blobs must be positive");
  double sum = 0.0;
  for (double p : proportions) {
    if (p < 0.0) throw ConfigError("proportions must be nonnegative");
    sum += p;
  }
  if (proportions.empty() || std::abs(sum - 1.0) > 1e-9) {
    throw ConfigError("proportions must sum to 1");
  }

  SplitMix64 rng(seed);
  std::vector<std::vector<double>> blob_centers;
  const double pi = 3.14159265358979323846;
  for (int b = 0; b < k_blobs; ++b) {
    double ang = 2.0 * pi * b / k_blobs;
    blob_centers.push_back({10.0 * std::cos(ang), 10.0 * std::sin(ang)});
  }

  Dataset ds;
  for (std::size_t a = 0; a < proportions.size(); ++a) {
    ds.attr_values.push_back("g" + std::to_string(a));
  }
  auto normal = [&]() {
    double u1 = 1.0 - rng.next_double();
    double u2 = rng.next_double();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * pi * u2);
  };
  for (int i = 0; i < n; ++i) {
    int b = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(k_blobs)));
    double x = blob_centers[b][0] + normal();
    double y = blob_centers[b][1] + normal();
    double u = rng.next_double();
    int a = 0;
    double acc = 0.0;
    for (std::size_t t = 0; t < proportions.size(); ++t) {
      acc += proportions[t];
      if (u < acc || t + 1 == proportions.size()) {
        a = static_cast<int>(t);
        break;
      }
    }
    ds.points.push_back({x, y});
    ds.attrs.push_back(a);
  }
  return ds;
}

}  // namespace fairfront
