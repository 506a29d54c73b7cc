#include <doctest.h>

#include "seqgeom/errors.hpp"
#include "seqgeom/universality.hpp"

using namespace seqgeom;

namespace {

Point P(long x, long y) { return {Rat(x), Rat(y)}; }

NormalForm nf2() {
  return parse_normal_form("x3 = x2 + x2\nx4 = x2 * x3\n");
}

Witness w2() { return Witness{{Rat(1), Rat(2), Rat(4), Rat(8)}}; }

}  // namespace

TEST_CASE("normal form parsing") {
  NormalForm nf = parse_normal_form("x3 = x2 + x2\n");
  REQUIRE(nf.constraints.size() == 1);
  CHECK(nf.constraints[0].kind == NormalForm::Constraint::Kind::Add);
  CHECK(nf.constraints[0].i == 2);
  CHECK(nf.constraints[0].j == 2);
  CHECK(nf.constraints[0].k == 3);
  CHECK(nf.n_vars == 3);

  CHECK_THROWS_AS(parse_normal_form("x3 = x2 * x2\nx3 = x2 + x2\n"), InvariantViolation);
  CHECK_THROWS_AS(parse_normal_form("x2 = x3 + x1\n"), InvariantViolation);
  CHECK_THROWS_AS(parse_normal_form("x3 = x2 & x2\n"), ParseError);
  CHECK(parse_normal_form("vars 2\n").n_vars == 2);
}

TEST_CASE("witness checking") {
  CHECK_NOTHROW(check_witness(nf2(), w2()));
  CHECK_THROWS_AS(check_witness(nf2(), Witness{{Rat(1), Rat(2), Rat(5), Rat(10)}}),
                  UnsatisfiedWitness);
  CHECK_THROWS_AS(check_witness(nf2(), Witness{{Rat(2), Rat(3), Rat(6), Rat(18)}}),
                  UnsatisfiedWitness);
}

TEST_CASE("gadget incidences hold exactly") {
  GadgetLayout layout = place_gadgets(nf2(), w2());
  CHECK(gadget_incidence_violations(layout).empty());
  CHECK(layout.gadgets.size() == 2);
  // Addition gadget shape: a on the base axis, c on the vertical axis, d on
  // the y-input line through the origin.
  for (const auto& g : layout.gadgets) {
    if (g.constraint.kind != NormalForm::Constraint::Kind::Add) continue;
    CHECK(g.points.at("a").y == 0);
    CHECK(g.points.at("c").x == 0);
    const Point& d = g.points.at("d");
    CHECK(d.y * 1 == layout.values[g.constraint.j - 1] * d.x);  // slope y through origin
  }
}

TEST_CASE("minimal addition layout") {
  NormalForm nf = parse_normal_form("x2 = x1 + x1\n");
  GadgetLayout layout = place_gadgets(nf, Witness{{Rat(1), Rat(2)}});
  CHECK(layout.gadgets.size() == 1);
  CHECK(gadget_incidence_violations(layout).empty());
  AllowableSequence a = extract_from_points(layout.points);
  CHECK(validate(a).generalized_ok);
}

TEST_CASE("frame-only sequence for an empty constraint list") {
  NormalForm nf = parse_normal_form("vars 2\n");
  AllowableSequence a = build_sequence(nf);
  CHECK(a.n == 4);  // the four frame points
  CHECK(validate(a).generalized_ok);
}

TEST_CASE("symbolic sequence equals the witness extraction") {
  NormalForm nf = nf2();
  AllowableSequence sym = build_sequence(nf);
  CHECK(validate(sym).generalized_ok);
  GadgetLayout layout = place_gadgets(nf, w2());
  AllowableSequence ext = extract_from_points(layout.points);
  CHECK(canonical_form(sym) == canonical_form(ext));
}

TEST_CASE("witness independence") {
  NormalForm nf = nf2();
  GadgetLayout l1 = place_gadgets(nf, w2());
  GadgetLayout l2 = place_gadgets(nf, Witness{{Rat(1), Rat(3), Rat(6), Rat(18)}});
  AllowableSequence a1 = extract_from_points(l1.points);
  AllowableSequence a2 = extract_from_points(l2.points);
  CHECK(canonical_form(a1) == canonical_form(a2));
}

TEST_CASE("realization of the induced order type") {
  NormalForm nf = nf2();
  Realization r = realize_induced_order_type(nf);
  Chirotope got = Chirotope::from_points(r.labels, r.points);
  Chirotope want = induced_chirotope(build_sequence(nf));
  CHECK(got.table() == want.table());  // grounds carry different label styles
}

TEST_CASE("shared y-variable aligns the d points with the origin") {
  // Both additions use x2 as the y input.
  NormalForm nf = parse_normal_form("x3 = x1 + x2\nx4 = x2 + x2\n");
  Realization r = realize_induced_order_type(nf);
  int d1 = -1, d2 = -1, origin = -1;
  for (size_t i = 0; i < r.labels.size(); ++i) {
    if (r.labels[i] == "g1.d") d1 = static_cast<int>(i);
    if (r.labels[i] == "g2.d") d2 = static_cast<int>(i);
    if (r.labels[i] == "O") origin = static_cast<int>(i);
  }
  REQUIRE(d1 >= 0);
  REQUIRE(d2 >= 0);
  REQUIRE(origin >= 0);
  CHECK(orientation(r.points[d1], r.points[d2], r.points[origin]) == Sign::Zero);
}

TEST_CASE("distinct y-variables keep the d points in general position") {
  NormalForm nf = parse_normal_form("x3 = x2 + x2\nx4 = x2 + x3\nx5 = x3 + x4\n");
  Realization r = realize_induced_order_type(nf);
  std::vector<int> ds;
  int origin = -1;
  for (size_t i = 0; i < r.labels.size(); ++i) {
    if (r.labels[i].size() == 4 && r.labels[i].substr(2) == ".d") ds.push_back(static_cast<int>(i));
    if (r.labels[i] == "O") origin = static_cast<int>(i);
  }
  REQUIRE(ds.size() == 3);
  CHECK(orientation(r.points[ds[0]], r.points[ds[1]], r.points[ds[2]]) != Sign::Zero);
  for (int a : ds)
    for (int b : ds)
      if (a < b) CHECK(orientation(r.points[a], r.points[b], r.points[origin]) != Sign::Zero);
}

TEST_CASE("perturbing a gadget output flips the sequence") {
  NormalForm nf = nf2();
  AllowableSequence target = canonical_form(build_sequence(nf));
  GadgetLayout layout = place_gadgets(nf, w2());
  for (size_t gi = 0; gi < layout.gadgets.size(); ++gi) {
    for (int sgn : {+1, -1}) {
      Rat eps = make_rat(sgn, 1000000);
      GadgetLayout mod = layout;
      const auto& g = layout.gadgets[gi];
      Rat z = layout.values[g.constraint.k - 1] + eps;
      Point anchor, other;
      std::string moved;
      if (g.constraint.kind == NormalForm::Constraint::Kind::Add) {
        // c slides along the slope-x line through a to hit slope z from d.
        const Point &a = g.points.at("a"), &c = g.points.at("c"), &d = g.points.at("d");
        Rat x = layout.values[g.constraint.i - 1];
        // Solve (cy' - dy) = z (cx' - dx), cy' - ay = x (cx' - ax).
        Rat cx = (d.y - a.y + x * a.x - z * d.x) / (x - z);
        Rat cy = a.y + x * (cx - a.x);
        (void)c;
        moved = "c";
        anchor = {cx, cy};
      } else {
        // d slides along the vertical through c to hit slope z from b.
        const Point &b = g.points.at("b"), &cpt = g.points.at("c");
        Rat dx = cpt.x;
        Rat dy = b.y + z * (dx - b.x);
        moved = "d";
        anchor = {dx, dy};
      }
      std::string label = "g" + std::to_string(gi + 1) + "." + moved;
      for (size_t li = 0; li < mod.labels.size(); ++li)
        if (mod.labels[li] == label) mod.points[li] = anchor;
      AllowableSequence got = extract_from_points(mod.points);
      CHECK(canonical_form(got) != target);
    }
  }
}

TEST_CASE("simplify keeps simple sequences unchanged") {
  std::vector<Point> pts = {P(0, 0), P(4, 1), P(1, 3)};
  AllowableSequence a = extract_from_points(pts);
  CHECK(simplify_sequence(a, {1, 2, 3}) == a);
}

TEST_CASE("one collinear triple becomes a simple sequence") {
  std::vector<Point> pts = {P(0, 0), P(2, 0), P(1, 0), P(0, 1)};
  std::vector<int> order = {1, 2, 4, 3};  // the inner point comes last
  AllowableSequence a = extract_from_points(pts);
  REQUIRE_FALSE(validate(a).simple);
  AllowableSequence s = simplify_sequence(a, order);
  ValidationReport rep = validate(s);
  CHECK(rep.generalized_ok);
  CHECK(rep.simple);
  CHECK(s.n == 7);  // the point on one line becomes four points
  CHECK(s.moves.size() == static_cast<size_t>(7 * 6 / 2));

  std::vector<Point> micro = micro_model_simplify(pts, order);
  AllowableSequence oracle = extract_from_points(micro);
  CHECK(validate(oracle).simple);
  CHECK(canonical_form(s) == canonical_form(oracle));
}

TEST_CASE("a point on two lines becomes a simple sequence") {
  std::vector<Point> pts = {P(0, 0), P(4, 0), P(0, 4), P(6, -8), P(2, 0)};
  std::vector<int> order = {1, 2, 3, 4, 5};
  AllowableSequence a = extract_from_points(pts);
  REQUIRE_FALSE(validate(a).simple);
  AllowableSequence s = simplify_sequence(a, order);
  ValidationReport rep = validate(s);
  CHECK(rep.generalized_ok);
  CHECK(rep.simple);
  CHECK(s.n == 8);
  std::vector<Point> micro = micro_model_simplify(pts, order);
  AllowableSequence oracle = extract_from_points(micro);
  CHECK(validate(oracle).simple);
  CHECK(canonical_form(s) == canonical_form(oracle));
}

TEST_CASE("three concurrent lines are rejected") {
  // (1,1) lies on three lines spanned by the others.
  std::vector<Point> pts = {P(0, 0), P(2, 2), P(0, 2), P(2, 0), P(0, 1), P(2, 1), P(1, 1)};
  AllowableSequence a = extract_from_points(pts);
  CHECK_THROWS_AS(simplify_sequence(a, {1, 2, 3, 4, 5, 6, 7}), NotConstructible);
}
