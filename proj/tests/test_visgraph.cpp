#include <doctest.h>

#include "seqgeom/errors.hpp"
#include "seqgeom/visgraph.hpp"

using namespace seqgeom;

namespace {

Point P(long x, long y) { return {Rat(x), Rat(y)}; }

std::map<std::string, std::string> identity_bijection(const std::vector<std::string>& labels) {
  std::map<std::string, std::string> out;
  for (const auto& l : labels) out[l] = l;
  return out;
}

// Remap a geometric visibility graph (position labels) to construction labels.
LabeledGraph relabel(const LabeledGraph& g, const std::vector<std::string>& names) {
  LabeledGraph out = g;
  out.vertices = names;
  return out;
}

}  // namespace

TEST_CASE("convex quadrilateral sees everything") {
  PolygonScene s;
  s.outer = {P(0, 0), P(4, 0), P(4, 4), P(0, 4)};
  LabeledGraph g = visibility_graph(s);
  CHECK(g.edge_count() == 6);  // K4
}

TEST_CASE("centered triangular hole blocks the diagonals") {
  PolygonScene s;
  s.outer = {P(0, 0), P(8, 0), P(8, 8), P(0, 8)};
  s.holes = {{P(3, 5), P(5, 4), P(3, 3)}};  // clockwise triangle near the middle
  LabeledGraph g = visibility_graph(s);
  CHECK_FALSE(g.has_edge(0, 2));
  CHECK_FALSE(g.has_edge(1, 3));
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 2));
}

TEST_CASE("reflex quadrilateral has exactly one diagonal") {
  PolygonScene s;
  s.outer = {P(0, 0), P(6, 0), P(1, 1), P(0, 6)};  // reflex at (1,1)
  LabeledGraph g = visibility_graph(s);
  int diagonals = static_cast<int>(g.edge_count()) - 4;
  CHECK(diagonals == 1);
  CHECK(g.has_edge(0, 2));        // into the notch
  CHECK_FALSE(g.has_edge(1, 3));  // exits the polygon
}

TEST_CASE("scene validation rejects bad rings") {
  PolygonScene cw;
  cw.outer = {P(0, 0), P(0, 4), P(4, 0)};
  CHECK_THROWS_AS(validate_scene(cw), InvalidScene);

  PolygonScene hole_outside;
  hole_outside.outer = {P(0, 0), P(4, 0), P(4, 4), P(0, 4)};
  hole_outside.holes = {{P(5, 5), P(6, 6), P(5, 6)}};
  CHECK_THROWS_AS(validate_scene(hole_outside), InvalidScene);
}

TEST_CASE("visibility is invariant under scaling and translation") {
  PolygonScene s;
  s.outer = {P(0, 0), P(8, 0), P(8, 8), P(0, 8)};
  s.holes = {{P(3, 5), P(5, 4), P(3, 3)}};
  LabeledGraph g = visibility_graph(s);
  PolygonScene t = s;
  auto map = [](Point p) { return Point{p.x * 3 + 17, p.y * 3 - 5}; };
  for (Point& p : t.outer) p = map(p);
  for (auto& h : t.holes)
    for (Point& p : h) p = map(p);
  LabeledGraph g2 = visibility_graph(t);
  CHECK(verify_labeled_equal(g, g2, identity_bijection(g.vertices)).equal);
}

TEST_CASE("G_A counts for n = 3") {
  AllowableSequence a = extract_from_points({P(0, 0), P(4, 1), P(1, 3)});
  GaResult ga = build_ga(a);
  CHECK(ga.graph.n() == 51);  // 42 outer + 9 hole vertices
  REQUIRE(ga.graph.boundary_cycles.has_value());
  CHECK(ga.graph.boundary_cycles->size() == 4);
  CHECK(ga.graph.boundary_cycles->front().size() == 42);

  for (int m = 1; m <= 3; ++m) {
    std::string L = "L" + std::to_string(m), R = "R" + std::to_string(m);
    int ls = ga.graph.index_of(L + ".s");
    int rs = ga.graph.index_of(R + ".s");
    CHECK_FALSE(ga.graph.has_edge(ls, rs));
    int missing = 0;
    for (int v = 0; v < 42; ++v)
      if (v != ls && !ga.graph.has_edge(ls, v)) ++missing;
    CHECK(missing == 1);
    int ld = ga.graph.index_of(L + ".d");
    missing = 0;
    for (int v = 0; v < 42; ++v)
      if (v != ld && !ga.graph.has_edge(ld, v)) ++missing;
    CHECK(missing == 3);
    for (int j = 1; j <= 5; j += 2)
      CHECK_FALSE(ga.graph.has_edge(ld, ga.graph.index_of(R + ".l" + std::to_string(j))));
  }
  // Missing outer edges always involve a switch or diagonal vertex; pairs of
  // plain vertices are complete.
  auto special = [&](int v) {
    for (int m = 1; m <= 3; ++m) {
      std::string sm = std::to_string(m);
      if (ga.graph.vertices[v] == "L" + sm + ".s" || ga.graph.vertices[v] == "R" + sm + ".s")
        return true;
      if (ga.graph.vertices[v] == "L" + sm + ".d" || ga.graph.vertices[v] == "R" + sm + ".d")
        return true;
    }
    return false;
  };
  for (int v = 0; v < 42; ++v) {
    if (special(v)) continue;
    for (int w = v + 1; w < 42; ++w)
      if (!special(w)) CHECK(ga.graph.has_edge(v, w));
  }
}

TEST_CASE("verify_labeled_equal notices a single removed edge") {
  AllowableSequence a = extract_from_points({P(0, 0), P(4, 1), P(1, 3)});
  GaResult ga = build_ga(a);
  CHECK(verify_labeled_equal(ga.graph, ga.graph, identity_bijection(ga.graph.vertices)).equal);
  LabeledGraph g2 = ga.graph;
  g2.set_edge(0, 5, false);
  GraphDiff diff = verify_labeled_equal(ga.graph, g2, identity_bijection(ga.graph.vertices));
  CHECK_FALSE(diff.equal);
  CHECK(diff.missing_in_second == 1);
  CHECK(diff.extra_in_second == 0);
}

TEST_CASE("subdivision doubles the outer cycle") {
  AllowableSequence a = extract_from_points({P(0, 0), P(4, 1), P(1, 3)});
  GaResult ga = build_ga(a);
  LabeledGraph sub = subdivide_ga(ga);
  CHECK(sub.n() == 51 + 42);
  CHECK_FALSE(sub.boundary_cycles.has_value());
  const auto& outer = ga.graph.boundary_cycles->front();
  for (size_t i = 0; i < outer.size(); ++i) {
    int a1 = outer[i], b1 = outer[(i + 1) % outer.size()];
    CHECK_FALSE(sub.has_edge(a1, b1));
    int w = sub.index_of("w" + std::to_string(i));
    REQUIRE(w >= 0);
    CHECK(sub.has_edge(w, a1));
    CHECK(sub.has_edge(w, b1));
  }
}

TEST_CASE("realized scene reproduces G_A exactly") {
  std::vector<Point> pts = {P(0, 0), P(4, 1), P(1, 3)};
  AllowableSequence a = extract_from_points(pts);
  GaResult ga = build_ga(a);
  VgRealization real = realize_ga(pts);
  LabeledGraph geo = visibility_graph(real.scene);
  GraphDiff diff = verify_labeled_equal(relabel(geo, real.scene_vertex_labels), ga.graph,
                                        identity_bijection(real.scene_vertex_labels));
  if (!diff.equal)
    for (const auto& m : diff.mismatches) MESSAGE(m);
  CHECK(diff.equal);

  // The switch-to-switch segment meets both triangles of its switch.
  std::vector<SwitchRecord> sw = switches(a);
  for (int m = 1; m <= 3; ++m) {
    auto at = [&](const std::string& l) {
      auto it = std::find(real.scene_vertex_labels.begin(), real.scene_vertex_labels.end(), l);
      REQUIRE(it != real.scene_vertex_labels.end());
      size_t idx = it - real.scene_vertex_labels.begin();
      return idx < real.scene.outer.size()
                 ? real.scene.outer[idx]
                 : real.scene.holes[(idx - real.scene.outer.size()) / 3]
                                   [(idx - real.scene.outer.size()) % 3];
    };
    Point sl = at("L" + std::to_string(m) + ".s");
    Point sr = at("R" + std::to_string(m) + ".s");
    for (int e : sw[m - 1].members) {
      const auto& tri = real.scene.holes[e - 1];
      std::vector<Segment> edges = {{tri[0], tri[1]}, {tri[1], tri[2]}, {tri[2], tri[0]}};
      CHECK(open_segment_blocked(sl, sr, edges));
    }
  }
}

TEST_CASE("subdivided pipeline matches subdivide_ga") {
  std::vector<Point> pts = {P(0, 0), P(4, 1), P(1, 3)};
  AllowableSequence a = extract_from_points(pts);
  LabeledGraph sub = subdivide_ga(build_ga(a));
  VgRealization real = subdivide_realization(realize_ga(pts));
  LabeledGraph geo = visibility_graph(real.scene);
  GraphDiff diff = verify_labeled_equal(relabel(geo, real.scene_vertex_labels), sub,
                                        identity_bijection(real.scene_vertex_labels));
  if (!diff.equal)
    for (const auto& m : diff.mismatches) MESSAGE(m);
  CHECK(diff.equal);
}
