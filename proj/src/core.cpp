#include "fairfront/core.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace fairfront {

std::vector<int> Dataset::attr_counts() const {
  std::vector<int> counts(l(), 0);
  for (int a : attrs) counts[a]++;
  return counts;
}

namespace {

double sq_dist(const std::vector<double>& x, const std::vector<double>& s) {
  if (x.size() != s.size()) {
    throw std::invalid_argument("dimension mismatch in point_cost");
  }
  double sq = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    double diff = x[i] - s[i];
    sq += diff * diff;
  }
  return sq;
}

double euclid(const std::vector<double>& x, const std::vector<double>& s) {
  return std::sqrt(sq_dist(x, s));
}

}  // namespace

double point_cost(const std::vector<double>& x, const std::vector<double>& s,
                  const CostSpec& spec) {
  if (spec.p == 2) return sq_dist(x, s);
  if (spec.p == 1 || spec.p == kPInf) return euclid(x, s);
  throw ConfigError("unsupported exponent p");
}

double assignment_cost(const Dataset& ds, const CenterSet& centers,
                       const Assignment& asg, const CostSpec& spec) {
  if (static_cast<int>(asg.cluster_of.size()) != ds.n()) {
    throw std::invalid_argument("assignment size mismatch");
  }
  if (spec.p == kPInf) {
    double worst = 0.0;
    for (int i = 0; i < ds.n(); ++i) {
      worst = std::max(worst, euclid(ds.points[i], centers.centers[asg.cluster_of[i]]));
    }
    return worst;
  }
  double total = 0.0;
  for (int i = 0; i < ds.n(); ++i) {
    total += point_cost(ds.points[i], centers.centers[asg.cluster_of[i]], spec);
  }
  if (spec.aggregate == CostSpec::Aggregate::PNorm && spec.p == 2) {
    return std::sqrt(total);
  }
  return total;
}

CenterSet recompute_centers(const Dataset& ds, const Assignment& asg,
                            const CenterSet& previous, const CostSpec& spec) {
  if (spec.p == kPInf) {
    throw ConfigError("recompute_centers is undefined for p = infinity");
  }
  int k = previous.k();
  int d = ds.dim();
  CenterSet out = previous;
  std::vector<std::vector<int>> members(k);
  for (int i = 0; i < ds.n(); ++i) {
    int c = asg.cluster_of[i];
    if (c < 0 || c >= k) throw std::invalid_argument("cluster index out of range");
    members[c].push_back(i);
  }
  for (int c = 0; c < k; ++c) {
    if (members[c].empty()) continue;  // keep previous center
    std::vector<double> ctr(d, 0.0);
    if (spec.p == 2) {
      for (int i : members[c]) {
        for (int j = 0; j < d; ++j) ctr[j] += ds.points[i][j];
      }
      for (int j = 0; j < d; ++j) ctr[j] /= static_cast<double>(members[c].size());
    } else {
      std::vector<double> coord(members[c].size());
      for (int j = 0; j < d; ++j) {
        for (std::size_t t = 0; t < members[c].size(); ++t) {
          coord[t] = ds.points[members[c][t]][j];
        }
        std::sort(coord.begin(), coord.end());
        std::size_t m = coord.size();
        ctr[j] = (m % 2 == 1) ? coord[m / 2]
                              : 0.5 * (coord[m / 2 - 1] + coord[m / 2]);
      }
    }
    out.centers[c] = std::move(ctr);
  }
  return out;
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur.push_back(ch);
    }
  }
  fields.push_back(cur);
  return fields;
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

}  // namespace

Dataset load_csv(const std::string& path,
                 const std::vector<std::string>& feature_cols,
                 const std::string& attr_col) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  std::string line;
  if (!std::getline(in, line)) throw ParseError(path + ": empty file");

  std::vector<std::string> header = split_csv_line(line);
  for (auto& h : header) h = trim(h);
  auto col_index = [&](const std::string& name) {
    auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) {
      throw ParseError(path + ": missing column '" + name + "'");
    }
    return static_cast<std::size_t>(it - header.begin());
  };

  std::vector<std::size_t> feat_idx;
  feat_idx.reserve(feature_cols.size());
  for (const auto& name : feature_cols) feat_idx.push_back(col_index(name));
  std::size_t attr_idx = col_index(attr_col);

  Dataset ds;
  int row = 1;  // header was row 1
  while (std::getline(in, line)) {
    ++row;
    if (trim(line).empty()) continue;
    std::vector<std::string> fields = split_csv_line(line);
    if (fields.size() != header.size()) {
      throw ParseError(path + ": row " + std::to_string(row) + " has " +
                       std::to_string(fields.size()) + " fields, expected " +
                       std::to_string(header.size()));
    }
    std::vector<double> pt;
    pt.reserve(feat_idx.size());
    for (std::size_t fi = 0; fi < feat_idx.size(); ++fi) {
      std::string cell = trim(fields[feat_idx[fi]]);
      double v = 0.0;
      auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
      if (ec != std::errc() || ptr != cell.data() + cell.size()) {
        throw ParseError(path + ": row " + std::to_string(row) + ", column '" +
                         feature_cols[fi] + "': not a number: '" + cell + "'");
      }
      pt.push_back(v);
    }
    std::string attr = trim(fields[attr_idx]);
    if (attr.empty()) {
      throw ParseError(path + ": row " + std::to_string(row) + ", column '" +
                       attr_col + "': empty attribute");
    }
    auto it = std::find(ds.attr_values.begin(), ds.attr_values.end(), attr);
    int a;
    if (it == ds.attr_values.end()) {
      if (ds.attr_values.size() >= 255) {
        throw ParseError(path + ": more than 255 distinct attribute values");
      }
      a = static_cast<int>(ds.attr_values.size());
      ds.attr_values.push_back(attr);
    } else {
      a = static_cast<int>(it - ds.attr_values.begin());
    }
    ds.points.push_back(std::move(pt));
    ds.attrs.push_back(a);
  }
  if (ds.points.empty()) throw ParseError(path + ": no data rows");
  return ds;
}

CenterSet load_centers_csv(const std::string& path,
                           const std::vector<std::string>& feature_cols) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  std::string line;
  if (!std::getline(in, line)) throw ParseError(path + ": empty file");
  std::vector<std::string> header = split_csv_line(line);
  for (auto& h : header) h = trim(h);
  std::vector<std::size_t> feat_idx;
  for (const auto& name : feature_cols) {
    auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) {
      throw ParseError(path + ": missing column '" + name + "'");
    }
    feat_idx.push_back(static_cast<std::size_t>(it - header.begin()));
  }
  CenterSet cs;
  int row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (trim(line).empty()) continue;
    std::vector<std::string> fields = split_csv_line(line);
    if (fields.size() != header.size()) {
      throw ParseError(path + ": row " + std::to_string(row) + " has " +
                       std::to_string(fields.size()) + " fields, expected " +
                       std::to_string(header.size()));
    }
    std::vector<double> pt;
    for (std::size_t fi = 0; fi < feat_idx.size(); ++fi) {
      std::string cell = trim(fields[feat_idx[fi]]);
      double v = 0.0;
      auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
      if (ec != std::errc() || ptr != cell.data() + cell.size()) {
        throw ParseError(path + ": row " + std::to_string(row) + ", column '" +
                         feature_cols[fi] + "': not a number: '" + cell + "'");
      }
      pt.push_back(v);
    }
    cs.centers.push_back(std::move(pt));
  }
  if (cs.centers.empty()) throw ParseError(path + ": no center rows");
  return cs;
}

double pnorm_cost(double cost_sum, int p) {
  if (p == 2) return std::sqrt(cost_sum);
  return cost_sum;
}

}  // namespace fairfront
