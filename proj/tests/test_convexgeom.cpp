#include <doctest.h>

#include <random>

#include "seqgeom/convexgeom.hpp"
#include "seqgeom/errors.hpp"

using namespace seqgeom;

namespace {

Point P(long x, long y) { return {Rat(x), Rat(y)}; }

std::vector<std::string> labels_for(size_t n) {
  std::vector<std::string> out;
  for (size_t i = 1; i <= n; ++i) out.push_back(std::to_string(i));
  return out;
}

}  // namespace

TEST_CASE("three non-collinear points: every subset is convex") {
  ConvexGeometry g = geometry_from_points(labels_for(3), {P(0, 0), P(2, 0), P(0, 2)});
  CHECK(g.family().size() == 8);
  CHECK(check_cg_axioms(g).ok());
}

TEST_CASE("three collinear points: the outer pair is not convex") {
  ConvexGeometry g = geometry_from_points(labels_for(3), {P(0, 0), P(1, 0), P(2, 0)});
  CHECK(g.family().size() == 7);
  CHECK_FALSE(g.contains(g.mask_of({"1", "3"})));
  CHECK(check_cg_axioms(g).ok());
}

TEST_CASE("point geometries always satisfy the axioms") {
  std::mt19937 rng(53);
  std::uniform_int_distribution<long> coord(-6, 6);
  for (int t = 0; t < 12; ++t) {
    int n = 4 + static_cast<int>(rng() % 4);
    std::vector<Point> pts;
    while (static_cast<int>(pts.size()) < n) {
      Point p = P(coord(rng), coord(rng));
      bool dup = false;
      for (const Point& q : pts) dup |= q == p;
      if (!dup) pts.push_back(p);
    }
    ConvexGeometry g = geometry_from_points(labels_for(n), pts);
    CHECK(check_cg_axioms(g).ok());
  }
}

TEST_CASE("axiom violations are reported") {
  ConvexGeometry base = geometry_from_points(labels_for(3), {P(0, 0), P(2, 0), P(0, 2)});
  SUBCASE("missing empty set") {
    std::vector<uint32_t> fam;
    for (uint32_t m : base.family())
      if (m != 0) fam.push_back(m);
    CgAxiomReport rep = check_cg_axioms(ConvexGeometry(base.ground(), fam));
    bool ax1 = false;
    for (const auto& v : rep.sample) ax1 |= v.axiom == 1 && v.subject == 0;
    CHECK(ax1);
  }
  SUBCASE("gap breaks one-point extension") {
    ConvexGeometry g(labels_for(3), {0u, 1u, 2u, 7u});
    CgAxiomReport rep = check_cg_axioms(g);
    CHECK_FALSE(rep.ok());
    bool ax3 = false;
    for (const auto& v : rep.sample) ax3 |= v.axiom == 3;
    CHECK(ax3);
  }
  SUBCASE("missing pairwise intersection") {
    // {1,2} and {2,3} present but {2} absent.
    ConvexGeometry g(labels_for(3), {0u, 1u, 3u, 6u, 7u});
    CgAxiomReport rep = check_cg_axioms(g);
    bool ax2 = false;
    for (const auto& v : rep.sample) ax2 |= v.axiom == 2 && v.subject == 2u;
    CHECK(ax2);
  }
}

TEST_CASE("double ring construction invariants") {
  for (int k : {3, 4, 5}) {
    DoubleRing ring = double_ring(k);
    REQUIRE(ring.points.size() == static_cast<size_t>(4 * k));
    std::vector<Point> hull = convex_hull(ring.points);
    REQUIRE(hull.size() == static_cast<size_t>(2 * k));
    // Removing r_i exposes r'_i on the hull.
    for (int i = 0; i < 2 * k; ++i) {
      std::vector<Point> rest;
      for (int j = 0; j < 4 * k; ++j)
        if (j != i) rest.push_back(ring.points[j]);
      std::vector<Point> h = convex_hull(rest);
      CHECK(std::find(h.begin(), h.end(), ring.points[2 * k + i]) != h.end());
    }
    // Each open side of line(r_i, r'_i) carries exactly k-1 point pairs.
    for (int i = 0; i < 2 * k; ++i) {
      int left = 0, right = 0;
      for (int j = 0; j < 2 * k; ++j) {
        if (j % k == i % k) continue;
        Sign s1 = orientation(ring.points[i], ring.points[2 * k + i], ring.points[j]);
        Sign s2 = orientation(ring.points[i], ring.points[2 * k + i], ring.points[2 * k + j]);
        REQUIRE(s1 == s2);  // the pair sits on one side
        (s1 == Sign::Pos ? left : right) += 1;
      }
      CHECK(left == k - 1);
      CHECK(right == k - 1);
    }
  }
}

TEST_CASE("double ring geometry satisfies the axioms for k=3") {
  DoubleRing ring = double_ring(3);
  ConvexGeometry g = geometry_from_points(ring.labels, ring.points);
  CHECK(check_cg_axioms(g).ok());
}

TEST_CASE("maximal convex sets missing the inner partner, k=3") {
  DoubleRing ring = double_ring(3);
  ConvexGeometry g = geometry_from_points(ring.labels, ring.points);
  for (int i = 1; i <= 6; ++i) {
    auto sets = maximal_convex_missing_pair(g, i);
    REQUIRE(sets.size() == 2);
    auto expected = [&](int dir) {
      std::vector<std::string> s = {"r" + std::to_string(i)};
      for (int step = 1; step <= 2; ++step) {
        int j = ((i - 1 + dir * step) % 6 + 6) % 6 + 1;
        s.push_back("r" + std::to_string(j));
        s.push_back("rp" + std::to_string(j));
      }
      std::sort(s.begin(), s.end());
      return s;
    };
    std::vector<std::vector<std::string>> got;
    for (auto s : sets) {
      CHECK(s.size() == 5);
      std::sort(s.begin(), s.end());
      got.push_back(s);
    }
    std::sort(got.begin(), got.end());
    std::vector<std::vector<std::string>> want = {expected(+1), expected(-1)};
    std::sort(want.begin(), want.end());
    CHECK(got == want);
  }
}

TEST_CASE("abstract geometry from a chirotope matches the point geometry") {
  std::mt19937 rng(59);
  std::uniform_int_distribution<long> coord(-5, 5);
  for (int t = 0; t < 10; ++t) {
    int n = 5 + static_cast<int>(rng() % 2);
    std::vector<Point> pts;
    while (static_cast<int>(pts.size()) < n) {
      Point p = P(coord(rng), coord(rng));
      bool dup = false;
      for (const Point& q : pts) dup |= q == p;
      if (!dup) pts.push_back(p);
    }
    Chirotope c = Chirotope::from_points(labels_for(n), pts);
    ConvexGeometry from_chi = geometry_from_chirotope(c);
    ConvexGeometry from_pts = geometry_from_points(labels_for(n), pts);
    CHECK(from_chi == from_pts);
  }
}

TEST_CASE("reduction to an order type: axioms and the ring realization") {
  std::vector<Point> pts = {P(0, 0), P(2, 0), P(1, 1)};
  AllowableSequence a = extract_from_points(pts);
  Chirotope oa = reduce_to_order_type(a);
  CHECK(oa.size() == 3 + 12);
  CHECK(oa.check_axioms().ok());

  RingRealization real = ring_realization(pts);
  Chirotope from_real = Chirotope::from_points(real.labels, real.points);
  CHECK(from_real == oa);
}

TEST_CASE("reduction round trip on a second configuration") {
  std::vector<Point> pts = {P(0, 0), P(4, 1), P(1, 3)};
  AllowableSequence a = extract_from_points(pts);
  Chirotope oa = reduce_to_order_type(a);
  RingRealization real = ring_realization(pts);
  CHECK(Chirotope::from_points(real.labels, real.points) == oa);
  // Restricting the realization to ring labels reproduces the double ring
  // geometry under the label bijection.
  std::vector<std::string> ring_labels(real.labels.begin() + 3, real.labels.end());
  std::vector<Point> ring_points(real.points.begin() + 3, real.points.end());
  ConvexGeometry ring_geo = geometry_from_points(ring_labels, ring_points);
  DoubleRing ring = double_ring(3);
  ConvexGeometry ref = geometry_from_points(ring.labels, ring.points);
  CHECK(ring_geo == ref);
}

TEST_CASE("parallel moves are rejected by the reduction") {
  std::vector<Point> square = {P(0, 0), P(1, 0), P(0, 1), P(1, 1)};
  AllowableSequence a = extract_from_points(square);
  CHECK_THROWS_AS(reduce_to_order_type(a), InvalidSequence);
}
