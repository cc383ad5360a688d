#include "fairfront/fairness.hpp"

#include <algorithm>
#include <cstdlib>

namespace fairfront {

int Pattern::cluster_size(int i) const {
  int s = 0;
  for (int a = 0; a < l; ++a) s += at(i, a);
  return s;
}

std::vector<int> Pattern::column_sums() const {
  std::vector<int> sums(l, 0);
  for (int i = 0; i < k; ++i) {
    for (int a = 0; a < l; ++a) sums[a] += at(i, a);
  }
  return sums;
}

int Pattern::nonempty_rows() const {
  int c = 0;
  for (int i = 0; i < k; ++i) {
    if (cluster_size(i) > 0) ++c;
  }
  return c;
}

std::string Pattern::to_string() const {
  std::string s;
  for (int i = 0; i < k; ++i) {
    if (i) s += ';';
    for (int a = 0; a < l; ++a) {
      if (a) s += ',';
      s += std::to_string(at(i, a));
    }
  }
  return s;
}

Pattern pattern_of(const Dataset& ds, const Assignment& asg, int k) {
  Pattern p(k, ds.l());
  for (int i = 0; i < ds.n(); ++i) {
    int c = asg.cluster_of[i];
    if (c < 0 || c >= k) throw std::invalid_argument("cluster index out of range");
    p.at(c, ds.attrs[i])++;
  }
  return p;
}

Pattern merge_rows(const Pattern& p, int i, int j) {
  if (i == j || i < 0 || j < 0 || i >= p.k || j >= p.k) {
    throw std::invalid_argument("merge_rows needs two distinct rows");
  }
  Pattern out = p;
  for (int a = 0; a < p.l; ++a) {
    out.at(i, a) += out.at(j, a);
    out.at(j, a) = 0;
  }
  return out;
}

ProportionalBounds bounds_from_delta(const std::vector<int>& attr_counts,
                                     const Rational& delta) {
  if (delta < Rational(0)) throw ConfigError("delta must be nonnegative");
  long long n = 0;
  for (int c : attr_counts) n += c;
  if (n == 0) throw ConfigError("empty dataset");
  ProportionalBounds b;
  for (int c : attr_counts) {
    Rational pa(c, n);
    b.alpha.push_back(rat_min(Rational(1), (Rational(1) + delta) * pa));
    b.beta.push_back(rat_max(Rational(0), (Rational(1) - delta) * pa));
  }
  return b;
}

Rational delta_violation(int count, int size, const Rational& alpha,
                         const Rational& beta) {
  if (size == 0) return Rational(0);
  Rational ratio(count, size);
  Rational d = rat_max(beta - ratio, ratio - alpha);
  return rat_max(Rational(0), d);
}

const char* objective_name(Objective o) {
  switch (o) {
    case Objective::Balance: return "balance";
    case Objective::GroupUtilitarian: return "group-util";
    case Objective::GroupUtilitarianSum: return "group-util-sum";
    case Objective::GroupEgalitarian: return "group-egal";
    case Objective::GroupEgalitarianSum: return "group-egal-sum";
    case Objective::SumOfImbalances: return "sum-imbalance";
    case Objective::MaxImbalance: return "max-imbalance";
    case Objective::TauRatioShortfall: return "tau-ratio";
  }
  return "?";
}

Objective objective_from_name(const std::string& name) {
  for (Objective o : {Objective::Balance, Objective::GroupUtilitarian,
                      Objective::GroupUtilitarianSum, Objective::GroupEgalitarian,
                      Objective::GroupEgalitarianSum, Objective::SumOfImbalances,
                      Objective::MaxImbalance, Objective::TauRatioShortfall}) {
    if (name == objective_name(o)) return o;
  }
  throw ConfigError("unknown objective '" + name + "'");
}

bool FairnessSpec::mergeable() const {
  return kind != Objective::MaxImbalance && kind != Objective::TauRatioShortfall;
}

namespace {

void require_two_groups(const Pattern& p, Objective o) {
  if (p.l != 2) {
    throw ConfigError(std::string(objective_name(o)) +
                      " is defined for exactly two attribute values");
  }
}

const ProportionalBounds& require_bounds(const FairnessSpec& spec, const Pattern& p) {
  if (static_cast<int>(spec.bounds.alpha.size()) != p.l ||
      static_cast<int>(spec.bounds.beta.size()) != p.l) {
    throw ConfigError("proportional bounds missing or wrong arity");
  }
  return spec.bounds;
}

}  // namespace

Rational evaluate(const FairnessSpec& spec, const Pattern& p) {
  switch (spec.kind) {
    case Objective::Balance: {
      require_two_groups(p, spec.kind);
      Rational best(1);
      bool any = false;
      for (int i = 0; i < p.k; ++i) {
        int c0 = p.at(i, 0), c1 = p.at(i, 1);
        if (c0 == 0 && c1 == 0) continue;  // empty cluster
        any = true;
        Rational bal = (c0 == 0 || c1 == 0)
                           ? Rational(0)
                           : rat_min(Rational(c0, c1), Rational(c1, c0));
        best = rat_min(best, bal);
      }
      if (!any) return Rational(0);
      return -best;
    }
    case Objective::GroupUtilitarian:
    case Objective::GroupUtilitarianSum:
    case Objective::GroupEgalitarian:
    case Objective::GroupEgalitarianSum: {
      const ProportionalBounds& b = require_bounds(spec, p);
      std::vector<int> sizes(p.k);
      for (int i = 0; i < p.k; ++i) sizes[i] = p.cluster_size(i);
      Rational total(0);
      for (int a = 0; a < p.l; ++a) {
        Rational agg(0);
        for (int i = 0; i < p.k; ++i) {
          Rational d = delta_violation(p.at(i, a), sizes[i], b.alpha[a], b.beta[a]);
          bool sum_over_clusters = spec.kind == Objective::GroupUtilitarianSum ||
                                   spec.kind == Objective::GroupEgalitarianSum;
          agg = sum_over_clusters ? agg + d : rat_max(agg, d);
        }
        bool sum_over_attrs = spec.kind == Objective::GroupUtilitarian ||
                              spec.kind == Objective::GroupUtilitarianSum;
        total = sum_over_attrs ? total + agg : rat_max(total, agg);
      }
      return total;
    }
    case Objective::SumOfImbalances: {
      require_two_groups(p, spec.kind);
      long long s = 0;
      for (int i = 0; i < p.k; ++i) s += std::abs(p.at(i, 0) - p.at(i, 1));
      return Rational(s);
    }
    case Objective::MaxImbalance: {
      require_two_groups(p, spec.kind);
      long long m = 0;
      for (int i = 0; i < p.k; ++i) {
        m = std::max<long long>(m, std::abs(p.at(i, 0) - p.at(i, 1)));
      }
      return Rational(m);
    }
    case Objective::TauRatioShortfall: {
      std::vector<int> na = p.column_sums();
      Rational worst(0);
      for (int a = 0; a < p.l; ++a) {
        Rational quota = spec.tau * Rational(na[a]);
        for (int i = 0; i < p.k; ++i) {
          worst = rat_max(worst, quota - Rational(p.at(i, a)));
        }
      }
      return worst;
    }
  }
  throw std::logic_error("unhandled objective");
}

}  // namespace fairfront
