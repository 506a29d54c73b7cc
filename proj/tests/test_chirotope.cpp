#include <doctest.h>

#include <random>
#include <set>

#include "seqgeom/chirotope.hpp"
#include "seqgeom/errors.hpp"

using namespace seqgeom;

namespace {

Point P(long x, long y) { return {Rat(x), Rat(y)}; }

std::vector<std::string> labels_for(size_t n) {
  std::vector<std::string> out;
  for (size_t i = 1; i <= n; ++i) out.push_back(std::to_string(i));
  return out;
}

std::vector<Point> random_points(std::mt19937& rng, int n, bool general_position) {
  std::uniform_int_distribution<long> num(-30, 30), den(1, 6);
  while (true) {
    std::vector<Point> pts;
    for (int i = 0; i < n; ++i) pts.push_back({make_rat(num(rng), den(rng)), make_rat(num(rng), den(rng))});
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = i + 1; j < n && ok; ++j) {
        if (pts[i] == pts[j]) ok = false;
        for (int k = j + 1; k < n && ok && general_position; ++k)
          if (orientation(pts[i], pts[j], pts[k]) == Sign::Zero) ok = false;
      }
    if (ok) return pts;
  }
}

bool in_conv_ref(const Point& d, const std::vector<Point>& pts, const std::set<int>& s) {
  std::vector<Point> sub;
  for (int i : s) sub.push_back(pts[i]);
  return point_in_hull(d, sub);
}

}  // namespace

TEST_CASE("chirotope from points stores determinant signs") {
  std::vector<Point> pts = {P(0, 0), P(1, 0), P(0, 1)};
  Chirotope c = Chirotope::from_points(labels_for(3), pts);
  CHECK(c.orient(0, 1, 2) == Sign::Pos);
  CHECK(c.orient(1, 0, 2) == Sign::Neg);
  CHECK(c.orient(0, 0, 2) == Sign::Zero);
}

TEST_CASE("collinear points give a zero triple but the map is stored") {
  std::vector<Point> pts = {P(0, 0), P(1, 1), P(2, 2)};
  Chirotope c = Chirotope::from_points(labels_for(3), pts);
  CHECK(c.orient(0, 1, 2) == Sign::Zero);
  CHECK(c.check_axioms().identically_zero);
}

TEST_CASE("ccw convex quadrilateral has all positive sorted triples") {
  std::vector<Point> pts = {P(0, 0), P(2, 0), P(2, 2), P(0, 2)};
  Chirotope c = Chirotope::from_points(labels_for(4), pts);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (int k = j + 1; k < 4; ++k) CHECK(c.orient(i, j, k) == Sign::Pos);
}

TEST_CASE("point chirotopes satisfy the axioms") {
  std::mt19937 rng(23);
  for (int n : {4, 5, 6, 7}) {
    std::vector<Point> pts = random_points(rng, n, false);
    Chirotope c = Chirotope::from_points(labels_for(n), pts);
    AxiomReport rep = c.check_axioms();
    CHECK(rep.ok());
  }
}

TEST_CASE("tampered pentagon violates axiom 3") {
  std::vector<Point> pts = {P(2, 0), P(1, 2), P(-1, 2), P(-2, 0), P(0, -2)};
  Chirotope good = Chirotope::from_points(labels_for(5), pts);
  REQUIRE(good.check_axioms().ok());
  // Flipping a consecutive triple like (1,2,3) is a mutation and stays
  // realizable; flipping the long triple (1,3,5) is not.
  {
    std::vector<int8_t> table = good.table();
    table[good.triple_index(0, 1, 2)] = -1;
    CHECK(Chirotope(labels_for(5), table).check_axioms().ok());
  }
  std::vector<int8_t> table = good.table();
  table[good.triple_index(0, 2, 4)] = -1;
  Chirotope bad(labels_for(5), table);
  AxiomReport rep = bad.check_axioms();
  CHECK_FALSE(rep.ok());
  CHECK_FALSE(rep.identically_zero);
  bool has_axiom3 = false;
  for (const auto& v : rep.sample) has_axiom3 |= v.axiom == 3;
  CHECK(has_axiom3);
}

TEST_CASE("closure basics") {
  std::vector<Point> pts = {P(0, 0), P(4, 0), P(0, 4), P(1, 1)};
  Chirotope c = Chirotope::from_points(labels_for(4), pts);
  CHECK(c.closure({}).empty());
  std::set<int> all = {0, 1, 2, 3};
  CHECK(c.closure(all) == all);
  std::set<int> tri = {0, 1, 2};
  CHECK(c.closure(tri) == all);  // the fourth point is inside
}

TEST_CASE("closure requires a simple chirotope") {
  std::vector<Point> pts = {P(0, 0), P(1, 0), P(2, 0), P(0, 1)};
  Chirotope c = Chirotope::from_points(labels_for(4), pts);
  CHECK_THROWS_AS(c.closure({0, 1}), NotSimple);
}

TEST_CASE("closure matches the coordinate oracle and is a closure operator") {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 10; ++trial) {
    int n = 6;
    std::vector<Point> pts = random_points(rng, n, true);
    Chirotope c = Chirotope::from_points(labels_for(n), pts);
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
      std::set<int> s;
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) s.insert(i);
      std::set<int> cl = c.closure(s);
      // coordinate oracle
      std::set<int> expect = s;
      for (int d = 0; d < n; ++d)
        if (!s.count(d) && !s.empty() && in_conv_ref(pts[d], pts, s)) expect.insert(d);
      CHECK(cl == expect);
      // extensive, idempotent, monotone (against supersets by one element)
      CHECK(std::includes(cl.begin(), cl.end(), s.begin(), s.end()));
      CHECK(c.closure(cl) == cl);
    }
  }
}
