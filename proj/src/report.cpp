#include "fairfront/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace fairfront {

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc()) throw std::logic_error("to_chars failed");
  return std::string(buf, ptr);
}

double fairness_display(const ParetoFront& front, const Rational& raw) {
  if (front.objective == Objective::Balance) return (-raw).to_double();
  return raw.to_double();
}

namespace {

std::string assignments_path_for(const std::string& front_path) {
  std::string stem = front_path;
  std::size_t dot = stem.find_last_of('.');
  std::size_t slash = stem.find_last_of('/');
  if (dot != std::string::npos && (slash == std::string::npos || dot > slash)) {
    stem = stem.substr(0, dot);
  }
  return stem + "_assignments.csv";
}

std::string basename_of(const std::string& path) {
  std::size_t slash = path.find_last_of('/');
  return slash == std::string::npos ? path : path.substr(slash + 1);
}

}  // namespace

void write_front_csv(const ParetoFront& front,
                     const std::vector<std::pair<double, double>>* recentered,
                     const std::string& path) {
  if (recentered && recentered->size() != front.entries.size()) {
    throw std::invalid_argument("recentered costs do not match the front");
  }
  std::string asg_path = assignments_path_for(path);

  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write " + path);
  out << "index,cost_sum_of_powers,cost_p_norm,fairness_raw,fairness_display,"
         "pattern,assignment_file";
  if (recentered) out << ",cost_recentered_sum_of_powers,cost_recentered_p_norm";
  out << "\n";
  for (std::size_t i = 0; i < front.entries.size(); ++i) {
    const FrontEntry& e = front.entries[i];
    out << i << ',' << format_double(e.cost) << ','
        << format_double(pnorm_cost(e.cost, front.p)) << ','
        << format_double(e.fairness.to_double()) << ','
        << format_double(fairness_display(front, e.fairness)) << ',';
    for (std::size_t t = 0; t < e.pattern.counts.size(); ++t) {
      if (t) out << ';';
      out << e.pattern.counts[t];
    }
    out << ',' << basename_of(asg_path);
    if (recentered) {
      out << ',' << format_double((*recentered)[i].first) << ','
          << format_double((*recentered)[i].second);
    }
    out << "\n";
  }
  out.close();

  std::ofstream aout(asg_path);
  if (!aout) throw ConfigError("cannot write " + asg_path);
  aout << "entry,point,cluster\n";
  for (std::size_t i = 0; i < front.entries.size(); ++i) {
    const auto& cl = front.entries[i].asg.cluster_of;
    for (std::size_t pt = 0; pt < cl.size(); ++pt) {
      aout << i << ',' << pt << ',' << cl[pt] << "\n";
    }
  }
}

std::vector<FrontCsvRow> read_front_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  std::string line;
  if (!std::getline(in, line)) throw ParseError(path + ": empty file");
  bool has_recentered = line.find("cost_recentered_sum_of_powers") != std::string::npos;

  auto parse_num = [&](const std::string& cell) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
    if (ec != std::errc() || ptr != cell.data() + cell.size()) {
      throw ParseError(path + ": bad number '" + cell + "'");
    }
    return v;
  };

  std::vector<FrontCsvRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::string cur;
    for (char ch : line) {
      if (ch == ',') {
        cells.push_back(cur);
        cur.clear();
      } else if (ch != '\r') {
        cur.push_back(ch);
      }
    }
    cells.push_back(cur);
    std::size_t expect = has_recentered ? 9 : 7;
    if (cells.size() != expect) {
      throw ParseError(path + ": wrong field count in data row");
    }
    FrontCsvRow r;
    r.index = static_cast<int>(parse_num(cells[0]));
    r.cost_sum_of_powers = parse_num(cells[1]);
    r.cost_p_norm = parse_num(cells[2]);
    r.fairness_raw = parse_num(cells[3]);
    r.fairness_display = parse_num(cells[4]);
    std::stringstream ps(cells[5]);
    std::string tok;
    while (std::getline(ps, tok, ';')) {
      r.pattern.push_back(static_cast<int>(parse_num(tok)));
    }
    r.assignment_file = cells[6];
    if (has_recentered) {
      r.recentered_sum = parse_num(cells[7]);
      r.recentered_p_norm = parse_num(cells[8]);
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

void emit_svg(const ParetoFront& front, const std::string& path) {
  if (front.entries.empty()) {
    throw std::invalid_argument("cannot plot an empty front");
  }
  const int width = 640, height = 480, margin = 64;
  std::vector<double> xs, ys;
  for (const FrontEntry& e : front.entries) {
    xs.push_back(pnorm_cost(e.cost, front.p));
    ys.push_back(fairness_display(front, e.fairness));
  }
  double xmin = *std::min_element(xs.begin(), xs.end());
  double xmax = *std::max_element(xs.begin(), xs.end());
  double ymin = *std::min_element(ys.begin(), ys.end());
  double ymax = *std::max_element(ys.begin(), ys.end());
  if (xmax - xmin < 1e-12) {
    xmin -= 1.0;
    xmax += 1.0;
  }
  if (ymax - ymin < 1e-12) {
    ymin -= 1.0;
    ymax += 1.0;
  }
  auto sx = [&](double x) {
    return margin + (x - xmin) / (xmax - xmin) * (width - 2 * margin);
  };
  auto sy = [&](double y) {
    return height - margin - (y - ymin) / (ymax - ymin) * (height - 2 * margin);
  };

  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write " + path);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' '
      << height << "\">\n";
  out << "<rect width=\"" << width << "\" height=\"" << height
      << "\" fill=\"white\"/>\n";
  out << "<line x1=\"" << margin << "\" y1=\"" << height - margin << "\" x2=\""
      << width - margin << "\" y2=\"" << height - margin
      << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << margin << "\" y1=\"" << margin << "\" x2=\"" << margin
      << "\" y2=\"" << height - margin << "\" stroke=\"black\"/>\n";

  for (int t = 0; t <= 3; ++t) {
    double xv = xmin + (xmax - xmin) * t / 3.0;
    double yv = ymin + (ymax - ymin) * t / 3.0;
    out << "<text x=\"" << format_double(sx(xv)) << "\" y=\"" << height - margin + 18
        << "\" font-size=\"11\" text-anchor=\"middle\">" << format_double(xv)
        << "</text>\n";
    out << "<text x=\"" << margin - 8 << "\" y=\"" << format_double(sy(yv) + 4)
        << "\" font-size=\"11\" text-anchor=\"end\">" << format_double(yv)
        << "</text>\n";
  }
  out << "<text x=\"" << width / 2 << "\" y=\"" << height - 16
      << "\" font-size=\"13\" text-anchor=\"middle\">cost (p-norm)</text>\n";
  out << "<text x=\"18\" y=\"" << height / 2
      << "\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
      << height / 2 << ")\">" << objective_name(front.objective) << "</text>\n";

  if (front.entries.size() > 1) {
    out << "<polyline fill=\"none\" stroke=\"#888888\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (i) {
        // step: horizontal to the next cost, then vertical
        out << ' ' << format_double(sx(xs[i])) << ',' << format_double(sy(ys[i - 1]));
      }
      if (i) out << ' ';
      out << format_double(sx(xs[i])) << ',' << format_double(sy(ys[i]));
    }
    out << "\"/>\n";
  }
  for (std::size_t i = 0; i < xs.size(); ++i) {
    out << "<circle cx=\"" << format_double(sx(xs[i])) << "\" cy=\""
        << format_double(sy(ys[i])) << "\" r=\"4\" fill=\"#1f6fb4\"/>\n";
  }
  out << "</svg>\n";
}

void save_dataset_csv(const Dataset& ds, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write " + path);
  for (int d = 0; d < ds.dim(); ++d) out << 'x' << d << ',';
  out << "group\n";
  for (int i = 0; i < ds.n(); ++i) {
    for (double v : ds.points[i]) out << format_double(v) << ',';
    out << ds.attr_values[ds.attrs[i]] << "\n";
  }
}

void save_centers_csv(const CenterSet& cs, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write " + path);
  int dim = cs.centers.empty() ? 0 : static_cast<int>(cs.centers[0].size());
  for (int d = 0; d < dim; ++d) {
    if (d) out << ',';
    out << 'x' << d;
  }
  out << "\n";
  for (const auto& c : cs.centers) {
    for (std::size_t d = 0; d < c.size(); ++d) {
      if (d) out << ',';
      out << format_double(c[d]);
    }
    out << "\n";
  }
}

}  // namespace fairfront
