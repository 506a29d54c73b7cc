#pragma once

#include <span>
#include <vector>

#include "seqgeom/rational.hpp"

namespace seqgeom {

struct Point {
  Rat x, y;
  bool operator==(const Point& o) const { return x == o.x && y == o.y; }
  bool operator!=(const Point& o) const { return !(*this == o); }
};

struct Segment {
  Point a, b;
};

// Determinant of the two points written as column vectors.
Rat det2(const Point& a, const Point& b);

// Sign of |b-a, c-a|: Pos for counterclockwise, Neg for clockwise.
Sign orientation(const Point& a, const Point& b, const Point& c);

// (|a,c| |b,d|) / (|a,d| |b,c|). Throws DegenerateCrossRatio on zero denominator.
Rat cross_ratio(const Point& a, const Point& b, const Point& c, const Point& d);

// True iff the open segment pq meets some listed closed segment in a point
// other than a contact at p or q themselves. Collinear overlap counts.
bool open_segment_blocked(const Point& p, const Point& q, std::span<const Segment> scene_edges);

// Hull vertices counterclockwise, collinear non-extreme points excluded,
// starting at the lexicographic minimum. Collinear input yields the two
// extreme points, a single point yields itself.
std::vector<Point> convex_hull(std::span<const Point> points);

// d inside or on the convex hull of `points` (any finite set, degenerate ok).
bool point_in_hull(const Point& d, std::span<const Point> points);

// d lies on the closed segment [a, b].
bool on_segment(const Point& d, const Point& a, const Point& b);

// Intersection of lines ab and cd; false when parallel or degenerate.
bool line_intersection(const Point& a, const Point& b, const Point& c, const Point& d, Point& out);

}  // namespace seqgeom
