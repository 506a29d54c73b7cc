#include <doctest.h>

#include <random>

#include "seqgeom/allowseq.hpp"
#include "seqgeom/errors.hpp"

using namespace seqgeom;

namespace {

Point P(long x, long y) { return {Rat(x), Rat(y)}; }

std::vector<std::string> labels_for(size_t n) {
  std::vector<std::string> out;
  for (size_t i = 1; i <= n; ++i) out.push_back(std::to_string(i));
  return out;
}

std::vector<Point> random_general_points(std::mt19937& rng, int n) {
  std::uniform_int_distribution<long> num(-40, 40), den(1, 5);
  while (true) {
    std::vector<Point> pts;
    for (int i = 0; i < n; ++i) pts.push_back({make_rat(num(rng), den(rng)), make_rat(num(rng), den(rng))});
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = i + 1; j < n && ok; ++j) {
        if (pts[i] == pts[j]) ok = false;
        for (int k = j + 1; k < n && ok; ++k)
          if (orientation(pts[i], pts[j], pts[k]) == Sign::Zero) ok = false;
        // distinct slopes
        for (int k = 0; k < n && ok; ++k)
          for (int l = k + 1; l < n && ok; ++l) {
            if (k == i && l == j) continue;
            Rat ax = pts[j].x - pts[i].x, ay = pts[j].y - pts[i].y;
            Rat bx = pts[l].x - pts[k].x, by = pts[l].y - pts[k].y;
            if (ax * by - ay * bx == 0) ok = false;
          }
      }
    if (ok) return pts;
  }
}

}  // namespace

TEST_CASE("extraction of the standard 3-point example") {
  std::vector<Point> pts = {P(0, 0), P(2, 0), P(1, 1)};
  AllowableSequence a = extract_from_points(pts);
  CHECK(a.first == std::vector<int>{1, 3, 2});
  REQUIRE(a.moves.size() == 3);
  std::vector<SwitchRecord> sw = switches(a);
  REQUIRE(sw.size() == 3);
  CHECK(sw[0].members == std::vector<int>{2, 3});
  CHECK(sw[1].members == std::vector<int>{1, 2});
  CHECK(sw[2].members == std::vector<int>{1, 3});
  ValidationReport rep = validate(a);
  CHECK(rep.generalized_ok);
  CHECK(rep.simple);
}

TEST_CASE("collinear triple reverses in one move") {
  AllowableSequence a = extract_from_points({P(0, 0), P(1, 0), P(2, 0)});
  CHECK(a.first == std::vector<int>{1, 2, 3});
  REQUIRE(a.moves.size() == 1);
  REQUIRE(a.moves[0].intervals.size() == 1);
  CHECK(a.moves[0].intervals[0].len == 3);
  CHECK(validate(a).generalized_ok);
  CHECK_FALSE(validate(a).simple);
}

TEST_CASE("square yields parallel double swaps") {
  AllowableSequence a = extract_from_points({P(0, 0), P(1, 0), P(0, 1), P(1, 1)});
  ValidationReport rep = validate(a);
  CHECK(rep.generalized_ok);
  CHECK_FALSE(rep.simple);
  int double_moves = 0;
  for (const Move& m : a.moves)
    if (m.intervals.size() == 2) ++double_moves;
  CHECK(double_moves == 2);
}

TEST_CASE("smallest sequence") {
  AllowableSequence a;
  a.n = 2;
  a.first = {1, 2};
  a.moves = {Move{{Interval{0, 2}}}};
  ValidationReport rep = validate(a);
  CHECK(rep.generalized_ok);
  CHECK(rep.simple);
}

TEST_CASE("duplicate reversal is reported") {
  AllowableSequence a;
  a.n = 2;
  a.first = {1, 2};
  a.moves = {Move{{Interval{0, 2}}}, Move{{Interval{0, 2}}}};
  ValidationReport rep = validate(a);
  CHECK_FALSE(rep.generalized_ok);
  bool mentions_twice = false;
  for (const auto& v : rep.violations) mentions_twice |= v.find("twice") != std::string::npos;
  CHECK(mentions_twice);
}

TEST_CASE("duplicate points are rejected") {
  CHECK_THROWS_AS(extract_from_points({P(1, 1), P(1, 1)}), DuplicatePoint);
}

TEST_CASE("induced chirotope of the 3-point example") {
  AllowableSequence a = extract_from_points({P(0, 0), P(2, 0), P(1, 1)});
  Chirotope c = induced_chirotope(a);
  CHECK(c.orient(0, 1, 2) == Sign::Pos);
}

TEST_CASE("induced chirotope of a collinear triple is zero") {
  AllowableSequence a = extract_from_points({P(0, 0), P(1, 0), P(2, 0)});
  Chirotope c = induced_chirotope(a);
  CHECK(c.orient(0, 1, 2) == Sign::Zero);
}

TEST_CASE("Goodman-Pollack consistency on random sets") {
  std::mt19937 rng(31);
  for (int t = 0; t < 30; ++t) {
    int n = 3 + static_cast<int>(rng() % 5);
    std::vector<Point> pts = random_general_points(rng, n);
    AllowableSequence a = extract_from_points(pts);
    ValidationReport rep = validate(a);
    REQUIRE(rep.generalized_ok);
    CHECK(rep.simple);
    CHECK(a.moves.size() == static_cast<size_t>(n * (n - 1) / 2));
    CHECK(permutations(a).size() == a.moves.size() + 1);
    Chirotope from_seq = induced_chirotope(a);
    Chirotope from_pts = Chirotope::from_points(labels_for(n), pts);
    CHECK(from_seq == from_pts);
  }
}

TEST_CASE("final permutation is the reverse of the first") {
  std::mt19937 rng(37);
  std::vector<Point> pts = random_general_points(rng, 6);
  AllowableSequence a = extract_from_points(pts);
  std::vector<std::vector<int>> perms = permutations(a);
  std::vector<int> rev(a.first.rbegin(), a.first.rend());
  CHECK(perms.back() == rev);
}

TEST_CASE("canonical form is idempotent and reflection invariant") {
  std::mt19937 rng(41);
  for (int t = 0; t < 10; ++t) {
    std::vector<Point> pts = random_general_points(rng, 5);
    AllowableSequence a = extract_from_points(pts);
    AllowableSequence c1 = canonical_form(a);
    CHECK(canonical_form(c1) == c1);
    AllowableSequence r = a;
    std::reverse(r.first.begin(), r.first.end());
    std::reverse(r.moves.begin(), r.moves.end());
    CHECK(canonical_form(r) == c1);
  }
}

TEST_CASE("canonical form absorbs rotations of the point set") {
  std::mt19937 rng(43);
  for (int t = 0; t < 10; ++t) {
    std::vector<Point> pts = random_general_points(rng, 5);
    std::vector<Point> rot;
    for (const Point& p : pts) rot.push_back({-p.y, p.x});  // quarter turn
    AllowableSequence a = extract_from_points(pts);
    AllowableSequence b = extract_from_points(rot);
    CHECK(canonical_form(a) == canonical_form(b));
  }
}
