#include "fairfront/matching.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <thread>

#include "fairfront/blossom.hpp"

namespace fairfront {

namespace {

constexpr int kMaxMatchNodes = 800;

std::vector<std::vector<double>> point_costs(const Dataset& ds,
                                             const CenterSet& centers,
                                             const CostSpec& cost) {
  if (cost.p == kPInf) {
    throw ConfigError("the matching route needs additive costs");
  }
  CostSpec sum_spec = cost;
  sum_spec.aggregate = CostSpec::Aggregate::SumOfPowers;
  std::vector<std::vector<double>> pc(ds.n(), std::vector<double>(centers.k()));
  for (int i = 0; i < ds.n(); ++i) {
    for (int c = 0; c < centers.k(); ++c) {
      pc[i][c] = point_cost(ds.points[i], centers.centers[c], sum_spec);
    }
  }
  return pc;
}

void require_two_groups(const Dataset& ds) {
  if (ds.l() != 2) {
    throw ConfigError("imbalance matching is defined for exactly two attribute values");
  }
}

void add_data_data_edges(const Dataset& ds,
                         const std::vector<std::vector<double>>& pc,
                         MatchGraph* g) {
  int n = ds.n();
  int k = static_cast<int>(pc[0].size());
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (ds.attrs[x] == ds.attrs[y]) continue;
      double best = pc[x][0] + pc[y][0];
      int bi = 0;
      for (int i = 1; i < k; ++i) {
        double v = pc[x][i] + pc[y][i];
        if (v < best) {
          best = v;
          bi = i;
        }
      }
      g->edges.push_back({x, y, best, bi});
    }
  }
}

}  // namespace

MatchGraph build_graph_sum(const Dataset& ds, const CenterSet& centers,
                           const CostSpec& cost, int F) {
  require_two_groups(ds);
  int n = ds.n();
  if (F < 0 || F % 2 != n % 2) {
    throw ConfigError("F must be nonnegative with the parity of n");
  }
  std::vector<std::vector<double>> pc = point_costs(ds, centers, cost);
  MatchGraph g;
  g.n_data = n;
  g.nodes = n + F;
  add_data_data_edges(ds, pc, &g);
  int k = centers.k();
  for (int x = 0; x < n; ++x) {
    double best = pc[x][0];
    int bi = 0;
    for (int i = 1; i < k; ++i) {
      if (pc[x][i] < best) {
        best = pc[x][i];
        bi = i;
      }
    }
    for (int d = 0; d < F; ++d) {
      g.edges.push_back({x, n + d, best, bi});
    }
  }
  return g;
}

MatchGraph build_graph_max(const Dataset& ds, const CenterSet& centers,
                           const CostSpec& cost, int F) {
  require_two_groups(ds);
  if (F < 0) throw ConfigError("F must be nonnegative");
  int n = ds.n();
  int k = centers.k();
  std::vector<std::vector<double>> pc = point_costs(ds, centers, cost);
  MatchGraph g;
  g.n_data = n;
  int dummies = k * F;
  bool parity = (n + dummies) % 2 == 1;
  g.nodes = n + dummies + (parity ? 1 : 0);
  add_data_data_edges(ds, pc, &g);
  for (int x = 0; x < n; ++x) {
    for (int i = 0; i < k; ++i) {
      for (int d = 0; d < F; ++d) {
        g.edges.push_back({x, n + i * F + d, pc[x][i], i});
      }
    }
  }
  int total_dummies = dummies + (parity ? 1 : 0);
  for (int a = 0; a < total_dummies; ++a) {
    for (int b = a + 1; b < total_dummies; ++b) {
      g.edges.push_back({n + a, n + b, 0.0, -1});
    }
  }
  return g;
}

MatchingResult min_weight_perfect_matching(const MatchGraph& g) {
  MatchingResult res;
  if (g.nodes % 2 == 1) return res;  // odd order: no perfect matching
  if (g.nodes == 0) {
    res.feasible = true;
    return res;
  }
  if (g.nodes > kMaxMatchNodes) {
    throw BudgetError("matching graph too large: " + std::to_string(g.nodes) +
                      " nodes, ceiling " + std::to_string(kMaxMatchNodes));
  }

  double w_max = 0.0;
  for (const auto& e : g.edges) {
    if (e.w < 0.0) throw std::invalid_argument("negative edge weight");
    w_max = std::max(w_max, e.w);
  }
  const double scale = w_max > 0.0 ? std::ldexp(1.0, 45) / w_max : 0.0;
  long long s_max = 0;
  std::vector<long long> scaled(g.edges.size(), 0);
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    scaled[i] = std::llround(g.edges[i].w * scale);
    s_max = std::max(s_max, scaled[i]);
  }
  long long big = s_max * (g.nodes / 2 + 1) + 1;

  std::vector<std::array<long long, 3>> edges;
  edges.reserve(g.edges.size());
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    edges.push_back({g.edges[i].u, g.edges[i].v, big - scaled[i]});
  }
  res.mate = detail::max_weight_matching(g.nodes, edges);
  for (int u = 0; u < g.nodes; ++u) {
    if (res.mate[u] < 0) return res;  // not perfect
  }
  res.feasible = true;

  std::vector<std::vector<double>> wm(g.nodes);
  for (auto& row : wm) row.assign(g.nodes, -1.0);
  for (const auto& e : g.edges) wm[e.u][e.v] = wm[e.v][e.u] = e.w;
  for (int u = 0; u < g.nodes; ++u) {
    int v = res.mate[u];
    if (v < u) continue;
    if (wm[u][v] < 0.0) throw std::logic_error("matched pair is not an edge");
    res.weight += wm[u][v];
  }
  return res;
}

Assignment clustering_from_matching(const MatchGraph& g, const std::vector<int>& mate) {
  std::vector<std::vector<int>> cl(g.nodes);
  for (auto& row : cl) row.assign(g.nodes, -1);
  for (const auto& e : g.edges) cl[e.u][e.v] = cl[e.v][e.u] = e.cluster;

  Assignment asg;
  asg.cluster_of.assign(g.n_data, -1);
  for (int u = 0; u < g.n_data; ++u) {
    int v = mate[u];
    if (v < 0) throw std::logic_error("data point left unmatched");
    int c = cl[u][v];
    if (c < 0) throw std::logic_error("data point matched over an untyped edge");
    asg.cluster_of[u] = c;
  }
  return asg;
}

ParetoFront imbalance_pareto(const Dataset& ds, const CenterSet& centers,
                             const CostSpec& cost, const FairnessSpec& fairness,
                             int threads) {
  if (fairness.kind != Objective::SumOfImbalances &&
      fairness.kind != Objective::MaxImbalance) {
    throw ConfigError("imbalance_pareto handles the two imbalance objectives only");
  }
  require_two_groups(ds);
  if (threads < 1) threads = 1;
  CostSpec sum_spec = cost;
  sum_spec.aggregate = CostSpec::Aggregate::SumOfPowers;

  ParetoFront front;
  front.objective = fairness.kind;
  front.p = cost.p;

  std::vector<int> counts = ds.attr_counts();
  int n0 = counts[0], n1 = counts[1];
  if (n0 == 0 || n1 == 0) {
    // degenerate group: cost and imbalance are not in tension, keep min cost
    Assignment asg;
    for (int i = 0; i < ds.n(); ++i) {
      int bi = 0;
      double bd = point_cost(ds.points[i], centers.centers[0], sum_spec);
      for (int c = 1; c < centers.k(); ++c) {
        double d = point_cost(ds.points[i], centers.centers[c], sum_spec);
        if (d < bd) {
          bd = d;
          bi = c;
        }
      }
      asg.cluster_of.push_back(bi);
    }
    FrontEntry e;
    e.asg = asg;
    e.pattern = pattern_of(ds, asg, centers.k());
    e.fairness = evaluate(fairness, e.pattern);
    e.cost = assignment_cost(ds, centers, asg, sum_spec);
    front.entries.push_back(std::move(e));
    return front;
  }

  bool is_sum = fairness.kind == Objective::SumOfImbalances;
  std::vector<int> levels;
  if (is_sum) {
    for (int F = std::abs(n0 - n1); F <= ds.n(); F += 2) levels.push_back(F);
  } else {
    for (int F = 0; F <= std::max(n0, n1); ++F) levels.push_back(F);
  }

  struct Candidate {
    double cost;
    Rational fairness{0};
    Assignment asg;
    Pattern pattern;
  };
  std::vector<std::optional<Candidate>> results(levels.size());

  auto solve_level = [&](std::size_t idx) {
    int F = levels[idx];
    MatchGraph g = is_sum ? build_graph_sum(ds, centers, cost, F)
                          : build_graph_max(ds, centers, cost, F);
    MatchingResult r = min_weight_perfect_matching(g);
    if (!r.feasible) return;
    Candidate c;
    c.asg = clustering_from_matching(g, r.mate);
    c.pattern = pattern_of(ds, c.asg, centers.k());
    c.fairness = evaluate(fairness, c.pattern);
    c.cost = assignment_cost(ds, centers, c.asg, sum_spec);
    results[idx] = std::move(c);
  };

  if (threads == 1 || levels.size() <= 1) {
    for (std::size_t i = 0; i < levels.size(); ++i) solve_level(i);
  } else {
    int t_count = std::min<std::size_t>(threads, levels.size());
    std::vector<std::thread> pool;
    for (int t = 0; t < t_count; ++t) {
      pool.emplace_back([&, t]() {
        for (std::size_t i = t; i < levels.size(); i += t_count) solve_level(i);
      });
    }
    for (auto& th : pool) th.join();
  }

  std::vector<ParetoCandidate> cands;
  for (std::size_t i = 0; i < results.size(); ++i) {
    if (!results[i]) continue;
    cands.push_back({results[i]->cost, results[i]->fairness,
                     static_cast<std::uint64_t>(i)});
  }
  for (std::size_t keep : pareto_filter(cands)) {
    Candidate& c = *results[cands[keep].tag];
    FrontEntry e;
    e.cost = c.cost;
    e.fairness = c.fairness;
    e.pattern = c.pattern;
    e.asg = c.asg;
    front.entries.push_back(std::move(e));
  }
  return front;
}

}  // namespace fairfront
