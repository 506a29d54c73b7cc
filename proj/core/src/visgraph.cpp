#include "seqgeom/visgraph.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

#include "seqgeom/errors.hpp"

namespace seqgeom {

void LabeledGraph::init(std::vector<std::string> labels) {
  vertices = std::move(labels);
  adj.assign(static_cast<size_t>(vertices.size()) * vertices.size(), 0);
}

int LabeledGraph::index_of(const std::string& label) const {
  auto it = std::find(vertices.begin(), vertices.end(), label);
  return it == vertices.end() ? -1 : static_cast<int>(it - vertices.begin());
}

void LabeledGraph::set_edge(int i, int j, bool present) {
  if (i == j) throw InvariantViolation("self loop");
  adj[static_cast<size_t>(i) * n() + j] = present ? 1 : 0;
  adj[static_cast<size_t>(j) * n() + i] = present ? 1 : 0;
}

size_t LabeledGraph::edge_count() const {
  size_t c = 0;
  for (int i = 0; i < n(); ++i)
    for (int j = i + 1; j < n(); ++j)
      if (has_edge(i, j)) ++c;
  return c;
}

std::vector<std::pair<int, int>> LabeledGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n(); ++i)
    for (int j = i + 1; j < n(); ++j)
      if (has_edge(i, j)) out.emplace_back(i, j);
  return out;
}

namespace {

Rat signed_area2(const std::vector<Point>& ring) {
  Rat s(0);
  for (size_t i = 0; i < ring.size(); ++i) {
    const Point& a = ring[i];
    const Point& b = ring[(i + 1) % ring.size()];
    s += a.x * b.y - b.x * a.y;
  }
  return s;
}

std::vector<Segment> ring_edges(const std::vector<Point>& ring) {
  std::vector<Segment> out;
  for (size_t i = 0; i < ring.size(); ++i) out.push_back({ring[i], ring[(i + 1) % ring.size()]});
  return out;
}

std::vector<Segment> all_edges(const PolygonScene& s) {
  std::vector<Segment> out = ring_edges(s.outer);
  for (const auto& h : s.holes) {
    auto he = ring_edges(h);
    out.insert(out.end(), he.begin(), he.end());
  }
  return out;
}

// Even-odd test against every boundary loop; the domain is outer minus holes.
bool point_in_domain(const Point& p, const std::vector<Segment>& edges) {
  bool inside = false;
  for (const Segment& e : edges) {
    bool a_above = e.a.y > p.y, b_above = e.b.y > p.y;
    if (a_above == b_above) continue;
    Rat xint = e.a.x + (p.y - e.a.y) * (e.b.x - e.a.x) / (e.b.y - e.a.y);
    if (p.x < xint) inside = !inside;
  }
  return inside;
}

bool rings_share_or_cross(const std::vector<Segment>& a, const std::vector<Segment>& b) {
  for (const Segment& e : a)
    for (const Segment& f : b) {
      if (open_segment_blocked(e.a, e.b, std::span<const Segment>(&f, 1))) return true;
      if (open_segment_blocked(f.a, f.b, std::span<const Segment>(&e, 1))) return true;
    }
  return false;
}

bool ring_simple(const std::vector<Point>& ring) {
  size_t n = ring.size();
  if (n < 3) return false;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const Point &a = ring[i], &b = ring[(i + 1) % n];
      Segment f{ring[j], ring[(j + 1) % n]};
      // Non-adjacent edges must not touch at all; adjacent ones only at the
      // shared vertex, which the open-segment test permits.
      if (open_segment_blocked(a, b, std::span<const Segment>(&f, 1))) return false;
    }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (ring[i] == ring[j]) return false;
  return true;
}

}  // namespace

void validate_scene(const PolygonScene& scene) {
  if (!ring_simple(scene.outer)) throw InvalidScene("outer ring not simple");
  if (signed_area2(scene.outer) <= 0) throw InvalidScene("outer ring not counterclockwise");
  std::vector<Segment> outer = ring_edges(scene.outer);
  for (size_t h = 0; h < scene.holes.size(); ++h) {
    const auto& hole = scene.holes[h];
    if (!ring_simple(hole)) throw InvalidScene("hole ring not simple");
    if (signed_area2(hole) >= 0) throw InvalidScene("hole ring not clockwise");
    for (const Point& p : hole)
      if (!point_in_domain(p, outer)) throw InvalidScene("hole vertex not strictly inside outer");
    std::vector<Segment> he = ring_edges(hole);
    if (rings_share_or_cross(he, outer)) throw InvalidScene("hole touches outer boundary");
    for (size_t g = 0; g < h; ++g)
      if (rings_share_or_cross(he, ring_edges(scene.holes[g])))
        throw InvalidScene("holes intersect");
  }
  std::vector<Point> all = scene.outer;
  for (const auto& h : scene.holes) all.insert(all.end(), h.begin(), h.end());
  for (size_t i = 0; i < all.size(); ++i)
    for (size_t j = i + 1; j < all.size(); ++j)
      if (all[i] == all[j]) throw InvalidScene("duplicate scene vertices");
}

LabeledGraph visibility_graph(const PolygonScene& scene) {
  validate_scene(scene);
  std::vector<Point> pts = scene.outer;
  std::vector<std::vector<int>> cycles;
  std::vector<int> outer_cycle(scene.outer.size());
  for (size_t i = 0; i < scene.outer.size(); ++i) outer_cycle[i] = static_cast<int>(i);
  cycles.push_back(outer_cycle);
  for (const auto& h : scene.holes) {
    std::vector<int> cyc;
    for (const Point& p : h) {
      cyc.push_back(static_cast<int>(pts.size()));
      pts.push_back(p);
    }
    cycles.push_back(cyc);
  }
  int n = static_cast<int>(pts.size());
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = std::to_string(i);
  LabeledGraph g;
  g.init(labels);
  g.boundary_cycles = cycles;

  std::vector<uint8_t> ring_adjacent(static_cast<size_t>(n) * n, 0);
  for (const auto& cyc : cycles)
    for (size_t i = 0; i < cyc.size(); ++i) {
      int a = cyc[i], b = cyc[(i + 1) % cyc.size()];
      ring_adjacent[static_cast<size_t>(a) * n + b] = 1;
      ring_adjacent[static_cast<size_t>(b) * n + a] = 1;
    }

  std::vector<Segment> edges = all_edges(scene);
  std::span<const Segment> edge_span(edges);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (ring_adjacent[static_cast<size_t>(i) * n + j]) {
        g.set_edge(i, j);
        continue;
      }
      if (open_segment_blocked(pts[i], pts[j], edge_span)) continue;
      Point mid{(pts[i].x + pts[j].x) / 2, (pts[i].y + pts[j].y) / 2};
      if (point_in_domain(mid, edges)) g.set_edge(i, j);
    }
  return g;
}

namespace {

struct SwitchInfo {
  int u_el, v_el;  // pair elements; u first in the first permutation
};

std::vector<SwitchInfo> simple_switches(const AllowableSequence& a) {
  std::vector<SwitchInfo> out;
  std::vector<int> pos_first(a.n + 1);
  for (int i = 0; i < a.n; ++i) pos_first[a.first[i]] = i;
  for (const SwitchRecord& sr : switches(a)) {
    int x = sr.members[0], y = sr.members[1];
    if (pos_first[x] > pos_first[y]) std::swap(x, y);
    out.push_back({x, y});
  }
  return out;
}

}  // namespace

GaResult build_ga(const AllowableSequence& a) {
  ValidationReport rep = validate(a);
  if (!rep.simple) throw NotSimple("build_ga requires a simple allowable sequence");
  if (a.n < 3) throw NotSimple("build_ga requires n >= 3");
  int n = a.n;
  int k = static_cast<int>(a.moves.size());
  int lower_count = 2 * n - 1;

  GaResult res;
  GadgetMap& map = res.map;
  std::vector<std::string> labels;
  map.left_interval.resize(k);
  map.right_interval.resize(k);
  for (int m = 1; m <= k; ++m) {
    auto& iv = map.left_interval[m - 1];
    iv.push_back("L" + std::to_string(m) + ".d");
    iv.push_back("L" + std::to_string(m) + ".s");
    for (int j = 1; j <= lower_count; ++j)
      iv.push_back("L" + std::to_string(m) + ".l" + std::to_string(j));
    labels.insert(labels.end(), iv.begin(), iv.end());
  }
  for (int m = 1; m <= k; ++m) {
    auto& iv = map.right_interval[m - 1];
    for (int j = lower_count; j >= 1; --j)
      iv.push_back("R" + std::to_string(m) + ".l" + std::to_string(j));
    iv.push_back("R" + std::to_string(m) + ".s");
    iv.push_back("R" + std::to_string(m) + ".d");
    labels.insert(labels.end(), iv.begin(), iv.end());
  }
  int outer_total = static_cast<int>(labels.size());
  for (int e = 1; e <= n; ++e) {
    map.hole[e] = {"H" + std::to_string(e) + ".a", "H" + std::to_string(e) + ".o",
                   "H" + std::to_string(e) + ".b"};
    for (const auto& l : map.hole[e]) labels.push_back(l);
  }

  LabeledGraph& g = res.graph;
  g.init(labels);
  std::vector<std::vector<int>> cycles;
  std::vector<int> outer_cycle(outer_total);
  for (int i = 0; i < outer_total; ++i) outer_cycle[i] = i;
  cycles.push_back(outer_cycle);
  for (int e = 1; e <= n; ++e) {
    int base = outer_total + 3 * (e - 1);
    cycles.push_back({base, base + 1, base + 2});
  }
  g.boundary_cycles = cycles;

  auto idx = [&](const std::string& l) {
    int i = g.index_of(l);
    if (i < 0) throw Error("internal: missing label " + l);
    return i;
  };

  // Outer: complete graph minus the switch-vertex and diagonal-vertex rules.
  for (int i = 0; i < outer_total; ++i)
    for (int j = i + 1; j < outer_total; ++j) g.set_edge(i, j);
  for (int m = 1; m <= k; ++m) {
    g.set_edge(idx("L" + std::to_string(m) + ".s"), idx("R" + std::to_string(m) + ".s"), false);
    for (int j = 1; j <= lower_count; j += 2) {
      g.set_edge(idx("L" + std::to_string(m) + ".d"),
                 idx("R" + std::to_string(m) + ".l" + std::to_string(j)), false);
      g.set_edge(idx("R" + std::to_string(m) + ".d"),
                 idx("L" + std::to_string(m) + ".l" + std::to_string(j)), false);
    }
  }

  // Holes: triangles; left holes see the non-obtuse vertices of right holes.
  std::vector<int> order = a.first;  // hole left-to-right order
  for (int e = 1; e <= n; ++e) {
    int base = outer_total + 3 * (e - 1);
    g.set_edge(base, base + 1);
    g.set_edge(base + 1, base + 2);
    g.set_edge(base, base + 2);
  }
  for (int oi = 0; oi < n; ++oi)
    for (int oj = oi + 1; oj < n; ++oj) {
      int e = order[oi], f = order[oj];
      for (const auto& le : map.hole[e])
        for (int t = 0; t < 3; t += 2)  // top and bottom of the right hole
          g.set_edge(idx(le), idx(map.hole[f][t]));
    }

  // Interval-hole rules.
  std::vector<SwitchInfo> sw = simple_switches(a);
  for (int m = 1; m <= k; ++m) {
    for (const auto& lv : map.left_interval[m - 1]) {
      bool is_switch = lv == "L" + std::to_string(m) + ".s";
      for (int e = 1; e <= n; ++e) {
        bool forbidden = is_switch && e == sw[m - 1].v_el;
        if (!forbidden) {
          g.set_edge(idx(lv), idx(map.hole[e][0]));
          g.set_edge(idx(lv), idx(map.hole[e][2]));
        }
      }
    }
    for (const auto& rv : map.right_interval[m - 1]) {
      bool is_switch = rv == "R" + std::to_string(m) + ".s";
      for (int e = 1; e <= n; ++e) {
        bool forbidden = is_switch && e == sw[m - 1].u_el;
        if (!forbidden)
          for (const auto& hv : map.hole[e]) g.set_edge(idx(rv), idx(hv));
      }
    }
  }
  return res;
}

LabeledGraph subdivide_ga(const GaResult& ga) {
  const LabeledGraph& g = ga.graph;
  if (!g.boundary_cycles) throw InvariantViolation("subdivide_ga needs boundary cycles");
  const std::vector<int>& outer = g.boundary_cycles->front();
  int n0 = g.n();
  int ne = static_cast<int>(outer.size());

  std::vector<std::string> labels = g.vertices;
  for (int i = 0; i < ne; ++i) labels.push_back("w" + std::to_string(i));
  LabeledGraph out;
  out.init(labels);

  for (int i = 0; i < n0; ++i)
    for (int j = i + 1; j < n0; ++j)
      if (g.has_edge(i, j)) out.set_edge(i, j);
  // Subdivision replaces each outer cycle edge.
  for (int i = 0; i < ne; ++i) out.set_edge(outer[i], outer[(i + 1) % ne], false);

  // w_i is hosted at the ccw-first endpoint of its edge and adopts that
  // corner's visibility, plus the other endpoint.
  auto host = [&](int i) { return outer[i]; };
  for (int i = 0; i < ne; ++i) {
    int w = n0 + i;
    int a = outer[i], b = outer[(i + 1) % ne];
    out.set_edge(w, a);
    out.set_edge(w, b);
    for (int v = 0; v < n0; ++v)
      if (v != a && v != b && g.has_edge(host(i), v)) out.set_edge(w, v);
    for (int j = 0; j < i; ++j)
      if (g.has_edge(host(i), host(j))) out.set_edge(w, n0 + j);
  }
  out.boundary_cycles = std::nullopt;
  return out;
}

namespace {

// Rational circle frame. Chart 0 parametrizes angles around 0, chart 1
// around pi; increasing t is counterclockwise in both.
struct Circle {
  Point c0;
  Rat radius;

  Point at(int chart, const Rat& t) const {
    Rat den = 1 + t * t;
    Rat ux = (1 - t * t) / den, uy = 2 * t / den;
    if (chart == 1) {
      ux = -ux;
      uy = -uy;
    }
    return {c0.x + radius * ux, c0.y + radius * uy};
  }

  static int chart_for(double ang) { return std::cos(ang) > -0.3 ? 0 : 1; }
  static double chart_param(int chart, double ang) {
    double a = chart == 0 ? ang : ang - M_PI;
    while (a > M_PI) a -= 2 * M_PI;
    while (a < -M_PI) a += 2 * M_PI;
    return std::tan(a / 2);
  }
};

Rat rat_from_double(double v) {
  constexpr long den = 1l << 40;
  double scaled = v * static_cast<double>(den);
  if (!(std::abs(scaled) < 9.0e18)) throw AdaptationFailed("parameter out of range");
  return make_rat(static_cast<long>(std::llround(scaled)), den);
}

// Bisection for a sign-changing predicate on one chart of the circle.
Point bisect_circle(const Circle& cir, int chart, double ang_guess, double halfwidth,
                    const std::function<bool(const Point&)>& pred, int steps) {
  for (int widen = 0; widen < 8; ++widen, halfwidth *= 2) {
    Rat lo = rat_from_double(Circle::chart_param(chart, ang_guess - halfwidth));
    Rat hi = rat_from_double(Circle::chart_param(chart, ang_guess + halfwidth));
    bool plo = pred(cir.at(chart, lo));
    bool phi = pred(cir.at(chart, hi));
    if (plo == phi) continue;
    for (int s = 0; s < steps; ++s) {
      Rat mid = (lo + hi) / 2;
      if (pred(cir.at(chart, mid)) == plo)
        lo = mid;
      else
        hi = mid;
    }
    return cir.at(chart, (lo + hi) / 2);
  }
  throw AdaptationFailed("could not bracket a frame vertex");
}

Rat dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }

Rat dist2_point_segment(const Point& p, const Point& a, const Point& b) {
  Point ab{b.x - a.x, b.y - a.y};
  Point ap{p.x - a.x, p.y - a.y};
  Rat len2 = dot(ab, ab);
  Rat t = dot(ap, ab);
  if (t <= 0) return dot(ap, ap);
  if (t >= len2) {
    Point bp{p.x - b.x, p.y - b.y};
    return dot(bp, bp);
  }
  Rat cr = ab.x * ap.y - ab.y * ap.x;
  return cr * cr / len2;
}

Rat sqrt_lower_bound(const Rat& v) {
  if (v <= 0) throw AdaptationFailed("degenerate clearance");
  Rat s = rat_from_double(std::sqrt(v.get_d()) * 0.75);
  if (s <= 0) s = v < 1 ? v : Rat(1);
  while (s * s >= v) s /= 2;
  return s;
}

}  // namespace

VgRealization realize_ga(const std::vector<Point>& points) {
  AllowableSequence a = extract_from_points(points);
  ValidationReport rep = validate(a);
  if (!rep.simple) throw NotSimple("realize_ga: points do not induce a simple sequence");
  int n = a.n;
  if (n < 3) throw NotSimple("realize_ga requires n >= 3");
  int k = static_cast<int>(a.moves.size());
  int lower_count = 2 * n - 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (points[i].x == points[j].x)
        throw InvalidScene("realize_ga: vertical spanned lines are not supported");

  GaResult comb = build_ga(a);
  std::vector<SwitchInfo> sw = simple_switches(a);
  std::vector<SwitchRecord> recs = switches(a);

  Point c0{Rat(0), Rat(0)};
  for (const Point& p : points) {
    c0.x += p.x;
    c0.y += p.y;
  }
  c0.x /= n;
  c0.y /= n;
  Rat spread(1);
  for (const Point& p : points) {
    Rat dx = abs(p.x - c0.x), dy = abs(p.y - c0.y);
    if (dx > spread) spread = dx;
    if (dy > spread) spread = dy;
  }

  Rat radius = spread * 1024 * k;
  Rat delta_margin = spread * 4;
  int steps = 48;

  for (int attempt = 0; attempt < 20; ++attempt) {
    Circle cir{c0, radius};
    bool placed_ok = false;
    // Outer vertex positions keyed by construction label.
    std::map<std::string, Point> pos;

    for (int inner = 0; inner < 32 && !placed_ok; ++inner) {
      pos.clear();
      Rat dmarg2 = delta_margin * 9 / 8;
      bool degenerate = false;
      for (int m = 1; m <= k && !degenerate; ++m) {
        const Point& px = points[sw[m - 1].u_el - 1];
        const Point& py = points[sw[m - 1].v_el - 1];
        // Switch direction normalized to (0, 180].
        Rat dx = -(py.y - px.y), dy = py.x - px.x;
        if (dy < 0 || (dy == 0 && dx > 0)) {
          dx = -dx;
          dy = -dy;
        }
        Point d{dx, dy};
        double ang_d = std::atan2(dy.get_d(), dx.get_d());
        auto eta = [&](const Point& q) -> Rat { return (q.x - c0.x) * d.x + (q.y - c0.y) * d.y; };
        Rat eta_scale = sqrt_lower_bound(dot(d, d));  // |d| lower bound
        Rat eta_line = eta(px);
        Rat eta_max = eta(points[0]);
        for (const Point& p : points) eta_max = std::max(eta_max, eta(p));
        Rat H = 2 * eta_max - eta_line + delta_margin * eta_scale;
        Rat H2 = 2 * eta_max - eta_line + dmarg2 * eta_scale;

        auto side_line = [&](const Point& A, const Point& B) {
          return [&, A, B](const Point& X) { return orientation(A, B, X) == Sign::Pos; };
        };
        auto eta_above = [&](Rat target) {
          return [&, target](const Point& X) { return eta(X) > target; };
        };
        double r_d = radius.get_d();
        auto place = [&](const std::string& label, double ang, double width,
                         const std::function<bool(const Point&)>& pred) {
          int chart = Circle::chart_for(ang);
          pos[label] = bisect_circle(cir, chart, ang, width, pred, steps);
        };
        std::string L = "L" + std::to_string(m), R = "R" + std::to_string(m);
        double aL = ang_d + M_PI / 2, aR = ang_d - M_PI / 2;
        double hval = Rat(H / eta_scale).get_d();
        double h2val = Rat(H2 / eta_scale).get_d();
        auto clamp_acos = [&](double v) {
          double c = v / r_d;
          return std::acos(std::max(-1.0, std::min(1.0, c)));
        };
        place(L + ".s", aL, 0.2, side_line(px, py));
        place(R + ".s", aR, 0.2, side_line(px, py));
        place(L + ".d", ang_d + clamp_acos(hval), 0.05, eta_above(H));
        place(R + ".d", ang_d - clamp_acos(h2val), 0.05, eta_above(H2));

        // Lower vertices: marked crossings through the opposite diagonal and
        // each point, fillers between consecutive marked levels.
        for (int side = 0; side < 2 && !degenerate; ++side) {
          const Point& apex = side == 0 ? pos[L + ".d"] : pos[R + ".d"];
          double arc_center = side == 0 ? aR : aL;
          int arc_sign = side == 0 ? -1 : +1;  // exits below the line level
          std::vector<std::pair<Rat, Point>> lowers;
          for (int e = 1; e <= n; ++e) {
            const Point& through = points[e - 1];
            Rat exit_eta = 2 * eta(through) - (side == 0 ? H : H2);
            double ang = ang_d + arc_sign * clamp_acos(Rat(exit_eta / eta_scale).get_d());
            int chart = Circle::chart_for(ang);
            Point w = bisect_circle(
                cir, chart, ang, 0.05,
                [&](const Point& X) { return orientation(apex, through, X) == Sign::Pos; },
                steps);
            lowers.emplace_back(eta(w), w);
          }
          std::sort(lowers.begin(), lowers.end(),
                    [](const auto& a, const auto& b) { return a.first > b.first; });
          for (size_t t = 0; t + 1 < lowers.size() && !degenerate; ++t)
            if (lowers[t].first == lowers[t + 1].first) degenerate = true;
          if (degenerate) break;
          std::vector<Point> ordered;  // descending eta
          for (size_t t = 0; t < lowers.size(); ++t) {
            ordered.push_back(lowers[t].second);
            if (t + 1 < lowers.size()) {
              Rat target = (lowers[t].first + lowers[t + 1].first) / 2;
              double ang = ang_d + arc_sign * clamp_acos(Rat(target / eta_scale).get_d());
              int chart = Circle::chart_for(ang);
              ordered.push_back(bisect_circle(cir, chart, ang, 0.05, eta_above(target), steps));
            }
          }
          std::string side_name = side == 0 ? R : L;
          for (int j = 1; j <= lower_count; ++j)
            pos[side_name + ".l" + std::to_string(j)] = ordered[j - 1];
          // Interval sanity: diagonal above switch above every lower.
          const Point& sv = pos[side_name + ".s"];
          const Point& dv = pos[side_name + ".d"];
          if (!(eta(dv) > eta(sv))) degenerate = true;
          for (const Point& lp : ordered)
            if (!(eta(sv) > eta(lp))) degenerate = true;
        }
      }
      if (degenerate) {
        delta_margin = delta_margin * 65 / 64;
        continue;
      }
      placed_ok = true;
    }
    if (!placed_ok) {
      radius *= 8;
      steps += 32;
      continue;
    }

    // Assemble the outer cycle in construction order and check convexity.
    std::vector<std::string> outer_labels;
    for (int m = 1; m <= k; ++m)
      outer_labels.insert(outer_labels.end(), comb.map.left_interval[m - 1].begin(),
                          comb.map.left_interval[m - 1].end());
    for (int m = 1; m <= k; ++m)
      outer_labels.insert(outer_labels.end(), comb.map.right_interval[m - 1].begin(),
                          comb.map.right_interval[m - 1].end());
    std::vector<Point> outer_pts;
    for (const auto& l : outer_labels) outer_pts.push_back(pos.at(l));
    bool convex_ok = true;
    size_t on = outer_pts.size();
    for (size_t i = 0; i < on && convex_ok; ++i) {
      if (outer_pts[i] == outer_pts[(i + 1) % on]) convex_ok = false;
      if (orientation(outer_pts[i], outer_pts[(i + 1) % on], outer_pts[(i + 2) % on]) != Sign::Pos)
        convex_ok = false;
    }
    if (!convex_ok) {
      radius *= 8;
      steps += 32;
      continue;
    }

    // Clearances of must-see chords against hole centers fix delta and eps.
    auto must_block = [&](const std::string& u, const std::string& v) {
      for (int m = 1; m <= k; ++m) {
        std::string L = "L" + std::to_string(m), R = "R" + std::to_string(m);
        if ((u == L + ".s" && v == R + ".s") || (v == L + ".s" && u == R + ".s")) return true;
        for (int j = 1; j <= lower_count; j += 2) {
          std::string wl = L + ".l" + std::to_string(j), wr = R + ".l" + std::to_string(j);
          if ((u == L + ".d" && v == wr) || (v == L + ".d" && u == wr)) return true;
          if ((u == R + ".d" && v == wl) || (v == R + ".d" && u == wl)) return true;
        }
      }
      return false;
    };
    Rat min_clear2(-1);
    bool zero_clear = false;
    auto fold_clear = [&](const Rat& c2) {
      if (c2 == 0) zero_clear = true;
      else if (min_clear2 < 0 || c2 < min_clear2) min_clear2 = c2;
    };
    for (size_t i = 0; i < on; ++i)
      for (size_t j = i + 1; j < on; ++j) {
        if (must_block(outer_labels[i], outer_labels[j])) continue;
        for (const Point& hc : points) fold_clear(dist2_point_segment(hc, outer_pts[i], outer_pts[j]));
      }
    for (size_t i = 0; i < on; ++i)
      for (int e = 1; e <= n; ++e) {
        // Switch vertices blocked from the far hole hug that sightline.
        bool skip = false;
        for (int m = 1; m <= k; ++m) {
          if (outer_labels[i] == "L" + std::to_string(m) + ".s" && e == sw[m - 1].v_el) skip = true;
          if (outer_labels[i] == "R" + std::to_string(m) + ".s" && e == sw[m - 1].u_el) skip = true;
        }
        if (skip) continue;
        for (int f = 1; f <= n; ++f)
          if (f != e) fold_clear(dist2_point_segment(points[f - 1], outer_pts[i], points[e - 1]));
      }
    for (int e = 1; e <= n; ++e)
      for (int f = e + 1; f <= n; ++f)
        for (int h = 1; h <= n; ++h)
          if (h != e && h != f)
            fold_clear(dist2_point_segment(points[h - 1], points[e - 1], points[f - 1]));
    for (int e = 1; e <= n; ++e)
      for (int f = e + 1; f <= n; ++f) {
        Point d{points[e - 1].x - points[f - 1].x, points[e - 1].y - points[f - 1].y};
        fold_clear(dot(d, d));
      }
    if (zero_clear || min_clear2 <= 0) {
      delta_margin = delta_margin * 65 / 64;
      continue;
    }
    Rat hole_half_height = sqrt_lower_bound(min_clear2) / 8;

    //  Obtuse vertices must hide behind their vertical edge from every
    //  left-side viewpoint: eps small against delta times the x-gap.
    Rat eps = hole_half_height / 4;
    bool frame_too_tight = false;
    auto fold_eps = [&](const Point& viewer, const Point& center) {
      Rat gap = center.x - viewer.x;
      // Viewer offsets stay within two hole heights of the listed positions.
      Rat dy = abs(viewer.y - center.y) + 4 * hole_half_height + 1;
      Rat bound = hole_half_height * gap / (4 * dy);
      if (bound < eps) eps = bound;
      if (gap / 4 < eps) eps = gap / 4;
    };
    for (int m = 1; m <= k; ++m)
      for (const auto& lv : comb.map.left_interval[m - 1])
        for (const Point& hc : points) {
          if (hc.x - pos.at(lv).x <= 0)
            frame_too_tight = true;  // left-interval vertex not left of a hole
          else
            fold_eps(pos.at(lv), hc);
        }
    for (int e = 1; e <= n; ++e)
      for (int f = 1; f <= n; ++f)
        if (e != f && points[e - 1].x < points[f - 1].x) fold_eps(points[e - 1], points[f - 1]);
    if (frame_too_tight) {
      radius *= 8;
      steps += 32;
      continue;
    }
    // Bisection slack must be far below the triangle core.
    Rat tol = radius;
    for (int s = 0; s < steps - 8; ++s) tol /= 2;
    if (!(tol * 16 < eps)) {
      steps += 64;
      continue;
    }

    PolygonScene scene;
    scene.outer = outer_pts;
    for (int e = 1; e <= n; ++e) {
      const Point& c = points[e - 1];
      std::vector<Point> tri = {{c.x - eps / 2, c.y + hole_half_height},
                                {c.x + eps / 2, c.y},
                                {c.x - eps / 2, c.y - hole_half_height}};
      scene.holes.push_back(tri);
    }

    std::vector<std::string> scene_labels = outer_labels;
    for (int e = 1; e <= n; ++e)
      for (const auto& l : comb.map.hole[e]) scene_labels.push_back(l);

    LabeledGraph geo = visibility_graph(scene);
    bool equal = geo.n() == comb.graph.n();
    for (int i = 0; i < geo.n() && equal; ++i) {
      int ci = comb.graph.index_of(scene_labels[i]);
      for (int j = i + 1; j < geo.n() && equal; ++j) {
        int cj = comb.graph.index_of(scene_labels[j]);
        if (geo.has_edge(i, j) != comb.graph.has_edge(ci, cj)) equal = false;
      }
    }
    if (equal) return {std::move(scene), std::move(scene_labels), std::move(a)};
    radius *= 8;
    steps += 32;
    delta_margin = delta_margin * 65 / 64;
  }
  throw AdaptationFailed("realize_ga: no parameter choice matched the combinatorial graph");
}

VgRealization subdivide_realization(const VgRealization& real) {
  const PolygonScene& s = real.scene;
  size_t on = s.outer.size();
  // Inward reference point: hole vertices keep coordinates small, the frame
  // vertices would blow up the common denominator.
  Point c0{Rat(0), Rat(0)};
  long cnt = 0;
  for (const auto& h : s.holes)
    for (const Point& p : h) {
      c0.x += p.x;
      c0.y += p.y;
      ++cnt;
    }
  if (cnt == 0) {
    for (const Point& p : s.outer) {
      c0.x += p.x;
      c0.y += p.y;
      ++cnt;
    }
  }
  c0.x /= cnt;
  c0.y /= cnt;

  Rat along(1, 1l << 30);
  // Pocket depth: sightlines between a vertex and a pocket vertex of a
  // nearby edge clear the frame by roughly along^2 * minlen^2 / R; one
  // global depth far below that keeps every wanted sightline open while any
  // positive depth blocks the subdivided edge itself.
  Rat min_ab2(-1);
  for (size_t i = 0; i < on; ++i) {
    const Point& A = s.outer[i];
    const Point& B = s.outer[(i + 1) % on];
    Rat ab2 = (B.x - A.x) * (B.x - A.x) + (B.y - A.y) * (B.y - A.y);
    if (min_ab2 < 0 || ab2 < min_ab2) min_ab2 = ab2;
  }
  Rat r_l1 = abs(s.outer[0].x - c0.x) + abs(s.outer[0].y - c0.y) + 1;
  Rat depth = min_ab2 / (r_l1 * (Rat(1) << 68));

  PolygonScene out;
  std::vector<std::string> labels;
  for (size_t i = 0; i < on; ++i) {
    const Point& A = s.outer[i];
    const Point& B = s.outer[(i + 1) % on];
    Rat ab_l1 = abs(B.x - A.x) + abs(B.y - A.y);
    Rat beta = make_rat(16 + static_cast<long>(i % 7), 16) * depth / ab_l1;
    Point w{A.x + (B.x - A.x) * along - (B.y - A.y) * beta,
            A.y + (B.y - A.y) * along + (B.x - A.x) * beta};
    out.outer.push_back(A);
    out.outer.push_back(w);
    labels.push_back(real.scene_vertex_labels[i]);
    labels.push_back("w" + std::to_string(i));
  }
  out.holes = s.holes;
  for (size_t i = on; i < real.scene_vertex_labels.size(); ++i)
    labels.push_back(real.scene_vertex_labels[i]);
  return {std::move(out), std::move(labels), real.sequence};
}

GraphDiff verify_labeled_equal(const LabeledGraph& g1, const LabeledGraph& g2,
                               const std::map<std::string, std::string>& bijection) {
  GraphDiff diff;
  if (g1.n() != g2.n()) {
    diff.mismatches.push_back("vertex counts differ");
    return diff;
  }
  std::vector<int> map1to2(g1.n(), -1);
  for (int i = 0; i < g1.n(); ++i) {
    auto it = bijection.find(g1.vertices[i]);
    if (it == bijection.end()) {
      diff.mismatches.push_back("no image for " + g1.vertices[i]);
      return diff;
    }
    int j = g2.index_of(it->second);
    if (j < 0) {
      diff.mismatches.push_back("image label missing: " + it->second);
      return diff;
    }
    map1to2[i] = j;
  }
  for (int i = 0; i < g1.n(); ++i)
    for (int j = i + 1; j < g1.n(); ++j) {
      bool e1 = g1.has_edge(i, j);
      bool e2 = g2.has_edge(map1to2[i], map1to2[j]);
      if (e1 == e2) continue;
      if (e1)
        diff.missing_in_second++;
      else
        diff.extra_in_second++;
      if (diff.mismatches.size() < 10)
        diff.mismatches.push_back((e1 ? "missing: " : "extra: ") + g1.vertices[i] + " -- " +
                                  g1.vertices[j]);
    }
  diff.equal = diff.missing_in_second == 0 && diff.extra_in_second == 0 && !g1.vertices.empty();
  return diff;
}

}  // namespace seqgeom
