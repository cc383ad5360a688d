#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>

#include "fairfront/core.hpp"
#include "test_util.hpp"

using namespace fairfront;

namespace {

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = name;
  std::ofstream out(path);
  out << content;
  return path;
}

}  // namespace

TEST_CASE("point_cost follows the exponent, distance stays Euclidean") {
  std::vector<double> x{0, 0}, s{3, 4};
  CHECK(point_cost(x, s, {1, CostSpec::Aggregate::SumOfPowers}) == 5.0);
  CHECK(point_cost(x, s, {2, CostSpec::Aggregate::SumOfPowers}) == 25.0);
  CHECK(point_cost(x, s, {kPInf, CostSpec::Aggregate::SumOfPowers}) == 5.0);
  CHECK_THROWS_AS(point_cost({0, 0}, {1, 2, 3}, CostSpec{}), std::invalid_argument);
}

TEST_CASE("assignment_cost sums in index order and applies the aggregate") {
  Dataset ds;
  ds.points = {{0, 0}, {3, 4}, {6, 8}};
  ds.attrs = {0, 0, 1};
  ds.attr_values = {"a", "b"};
  CenterSet cs;
  cs.centers = {{0, 0}, {6, 8}};
  Assignment asg{{0, 0, 1}};

  CHECK(assignment_cost(ds, cs, asg, {2, CostSpec::Aggregate::SumOfPowers}) == 25.0);
  CHECK(assignment_cost(ds, cs, asg, {2, CostSpec::Aggregate::PNorm}) == 5.0);
  CHECK(assignment_cost(ds, cs, asg, {1, CostSpec::Aggregate::SumOfPowers}) == 5.0);
  CHECK(assignment_cost(ds, cs, asg, {1, CostSpec::Aggregate::PNorm}) == 5.0);
  CHECK(assignment_cost(ds, cs, asg, {kPInf, CostSpec::Aggregate::SumOfPowers}) == 5.0);

  Assignment bad{{0, 0}};
  CHECK_THROWS_AS(assignment_cost(ds, cs, bad, CostSpec{}), std::invalid_argument);
}

TEST_CASE("recompute_centers: centroid for p=2, coordinate median for p=1") {
  Dataset ds;
  ds.points = {{0, 0}, {2, 0}, {0, 2}, {2, 2}, {9, 9}};
  ds.attrs = {0, 0, 0, 0, 0};
  ds.attr_values = {"a"};
  CenterSet prev;
  prev.centers = {{5, 5}, {7, 7}};

  Assignment asg{{0, 0, 0, 0, 1}};
  CenterSet c2 = recompute_centers(ds, asg, prev, {2, CostSpec::Aggregate::SumOfPowers});
  CHECK(c2.centers[0] == std::vector<double>{1, 1});
  CHECK(c2.centers[1] == std::vector<double>{9, 9});

  Dataset med;
  med.points = {{0, 0}, {0, 0}, {9, 0}};
  med.attrs = {0, 0, 0};
  med.attr_values = {"a"};
  Assignment all0{{0, 0, 0}};
  CenterSet single;
  single.centers = {{4, 4}};
  CenterSet c1 = recompute_centers(med, all0, single, {1, CostSpec::Aggregate::SumOfPowers});
  CHECK(c1.centers[0] == std::vector<double>{0, 0});

  Dataset even;
  even.points = {{0, 0}, {4, 0}};
  even.attrs = {0, 0};
  even.attr_values = {"a"};
  Assignment both{{0, 0}};
  CenterSet ce = recompute_centers(even, both, single, {1, CostSpec::Aggregate::SumOfPowers});
  CHECK(ce.centers[0] == std::vector<double>{2, 0});
}

TEST_CASE("recompute_centers keeps previous center for empty clusters") {
  Dataset ds;
  ds.points = {{1, 1}};
  ds.attrs = {0};
  ds.attr_values = {"a"};
  CenterSet prev;
  prev.centers = {{5, 5}, {7, 7}};
  Assignment asg{{0}};
  CenterSet out = recompute_centers(ds, asg, prev, {2, CostSpec::Aggregate::SumOfPowers});
  CHECK(out.centers[0] == std::vector<double>{1, 1});
  CHECK(out.centers[1] == std::vector<double>{7, 7});

  CHECK_THROWS_AS(
      recompute_centers(ds, asg, prev, {kPInf, CostSpec::Aggregate::SumOfPowers}),
      ConfigError);
}

TEST_CASE("load_csv parses features and maps attributes by first appearance") {
  std::string path = write_temp("core_ok.csv",
                                "x,y,color,junk\n"
                                "1.5,2,red,zzz\n"
                                "3,4,blue,zzz\n"
                                "5,6,red,zzz\n");
  Dataset ds = load_csv(path, {"x", "y"}, "color");
  CHECK(ds.n() == 3);
  CHECK(ds.dim() == 2);
  CHECK(ds.l() == 2);
  CHECK(ds.points[0] == std::vector<double>{1.5, 2});
  CHECK(ds.attr_values == std::vector<std::string>{"red", "blue"});
  CHECK(ds.attrs == std::vector<int>{0, 1, 0});
  CHECK(ds.attr_counts() == std::vector<int>{2, 1});
  std::remove(path.c_str());
}

TEST_CASE("load_csv handles CRLF and errors with row/column context") {
  std::string path = write_temp("core_crlf.csv", "x,g\r\n1,a\r\n2,b\r\n");
  Dataset ds = load_csv(path, {"x"}, "g");
  CHECK(ds.n() == 2);
  CHECK(ds.attr_values == std::vector<std::string>{"a", "b"});
  std::remove(path.c_str());

  std::string bad = write_temp("core_bad.csv", "x,g\n1,a\nfoo,b\n");
  try {
    load_csv(bad, {"x"}, "g");
    CHECK(false);
  } catch (const ParseError& e) {
    std::string msg = e.what();
    CHECK(msg.find("row 3") != std::string::npos);
    CHECK(msg.find("'x'") != std::string::npos);
  }
  std::remove(bad.c_str());

  std::string missing = write_temp("core_missing.csv", "x,g\n1,a\n");
  CHECK_THROWS_AS(load_csv(missing, {"x", "y"}, "g"), ParseError);
  std::remove(missing.c_str());

  std::string empty = write_temp("core_empty.csv", "");
  CHECK_THROWS_AS(load_csv(empty, {"x"}, "g"), ParseError);
  std::remove(empty.c_str());

  std::string headeronly = write_temp("core_header.csv", "x,g\n");
  CHECK_THROWS_AS(load_csv(headeronly, {"x"}, "g"), ParseError);
  std::remove(headeronly.c_str());

  CHECK_THROWS_AS(load_csv("definitely_not_here.csv", {"x"}, "g"), ParseError);
}

TEST_CASE("load_centers_csv") {
  std::string path = write_temp("core_centers.csv", "x,y\n0,0\n3,4\n");
  CenterSet cs = load_centers_csv(path, {"x", "y"});
  CHECK(cs.k() == 2);
  CHECK(cs.centers[1] == std::vector<double>{3, 4});
  std::remove(path.c_str());
}

TEST_CASE("pnorm_cost roots only for p=2") {
  CHECK(pnorm_cost(25.0, 2) == 5.0);
  CHECK(pnorm_cost(25.0, 1) == 25.0);
  CHECK(pnorm_cost(25.0, kPInf) == 25.0);
}
