#include "seqgeom/exact.hpp"

#include <algorithm>

#include "seqgeom/errors.hpp"

namespace seqgeom {

Rat det2(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }

Sign orientation(const Point& a, const Point& b, const Point& c) {
  Rat d = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return sign_of(d);
}

Rat cross_ratio(const Point& a, const Point& b, const Point& c, const Point& d) {
  Rat den = det2(a, d) * det2(b, c);
  if (den == 0) throw DegenerateCrossRatio("cross_ratio: |a,d| * |b,c| is zero");
  return det2(a, c) * det2(b, d) / den;
}

bool on_segment(const Point& d, const Point& a, const Point& b) {
  if (orientation(a, b, d) != Sign::Zero) return false;
  if (a.x != b.x) {
    auto [lo, hi] = std::minmax(a.x, b.x);
    return lo <= d.x && d.x <= hi;
  }
  auto [lo, hi] = std::minmax(a.y, b.y);
  return lo <= d.y && d.y <= hi;
}

namespace {

// z is collinear with pq; true iff z lies strictly between p and q.
bool strictly_inside(const Point& p, const Point& q, const Point& z) {
  if (z == p || z == q) return false;
  if (p.x != q.x) {
    auto [lo, hi] = std::minmax(p.x, q.x);
    return lo < z.x && z.x < hi;
  }
  auto [lo, hi] = std::minmax(p.y, q.y);
  return lo < z.y && z.y < hi;
}

// Closed segment e intersects the open segment pq. p != q assumed.
bool open_segment_hits(const Point& p, const Point& q, const Segment& e) {
  Sign d1 = orientation(e.a, e.b, p);
  Sign d2 = orientation(e.a, e.b, q);
  Sign d3 = orientation(p, q, e.a);
  Sign d4 = orientation(p, q, e.b);
  if (d3 == Sign::Zero && d4 == Sign::Zero) {
    // All four points on one line: compare 1-d parameters along pq.
    Rat dx = q.x - p.x, dy = q.y - p.y;
    Rat len2 = dx * dx + dy * dy;
    Rat ta = ((e.a.x - p.x) * dx + (e.a.y - p.y) * dy) / len2;
    Rat tb = ((e.b.x - p.x) * dx + (e.b.y - p.y) * dy) / len2;
    if (ta > tb) std::swap(ta, tb);
    Rat lo = ta < 0 ? Rat(0) : ta;
    Rat hi = tb > 1 ? Rat(1) : tb;
    return lo < hi;
  }
  // Line of e crosses the open interior of pq iff p, q strictly separated;
  // the crossing point lies on the closed e iff e's endpoints do not lie
  // strictly on one side of line pq.
  if (to_int(d1) * to_int(d2) < 0 && to_int(d3) * to_int(d4) <= 0) return true;
  // An endpoint of e lying strictly inside pq also blocks.
  if (d3 == Sign::Zero && strictly_inside(p, q, e.a)) return true;
  if (d4 == Sign::Zero && strictly_inside(p, q, e.b)) return true;
  return false;
}

}  // namespace

bool open_segment_blocked(const Point& p, const Point& q, std::span<const Segment> scene_edges) {
  for (const Segment& e : scene_edges)
    if (open_segment_hits(p, q, e)) return true;
  return false;
}

std::vector<Point> convex_hull(std::span<const Point> points) {
  std::vector<Point> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  size_t n = pts.size();
  if (n <= 1) return pts;
  std::vector<Point> hull(2 * n);
  size_t k = 0;
  for (size_t i = 0; i < n; ++i) {  // lower
    while (k >= 2 && orientation(hull[k - 2], hull[k - 1], pts[i]) != Sign::Pos) --k;
    hull[k++] = pts[i];
  }
  for (size_t i = n - 1, t = k + 1; i-- > 0;) {  // upper
    while (k >= t && orientation(hull[k - 2], hull[k - 1], pts[i]) != Sign::Pos) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

bool point_in_hull(const Point& d, std::span<const Point> points) {
  std::vector<Point> hull = convex_hull(points);
  if (hull.empty()) return false;
  if (hull.size() == 1) return d == hull[0];
  if (hull.size() == 2) return on_segment(d, hull[0], hull[1]);
  for (size_t i = 0; i < hull.size(); ++i) {
    const Point& a = hull[i];
    const Point& b = hull[(i + 1) % hull.size()];
    if (orientation(a, b, d) == Sign::Neg) return false;
  }
  return true;
}

bool line_intersection(const Point& a, const Point& b, const Point& c, const Point& d, Point& out) {
  Rat rx = b.x - a.x, ry = b.y - a.y;
  Rat sx = d.x - c.x, sy = d.y - c.y;
  Rat den = rx * sy - ry * sx;
  if (den == 0) return false;
  Rat t = ((c.x - a.x) * sy - (c.y - a.y) * sx) / den;
  out = Point{a.x + t * rx, a.y + t * ry};
  return true;
}

}  // namespace seqgeom
