#include "seqgeom/svg.hpp"

#include <cmath>
#include <sstream>

namespace seqgeom {

namespace {

struct Box {
  double minx = 0, miny = 0, maxx = 1, maxy = 1;
  void grow(double x, double y) {
    minx = std::min(minx, x);
    miny = std::min(miny, y);
    maxx = std::max(maxx, x);
    maxy = std::max(maxy, y);
  }
};

double dx(const Rat& r) { return r.get_d(); }

std::string header(const Box& b) {
  double w = b.maxx - b.minx, h = b.maxy - b.miny;
  double pad = 0.05 * std::max(w, h) + 1e-9;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" << (b.minx - pad)
      << " " << (-(b.maxy + pad)) << " " << (w + 2 * pad) << " " << (h + 2 * pad) << "\">\n";
  return out.str();
}

void emit_ring(std::ostringstream& out, const std::vector<Point>& ring, const char* style) {
  out << "<polygon points=\"";
  for (const Point& p : ring) out << dx(p.x) << "," << -dx(p.y) << " ";
  out << "\" " << style << "/>\n";
}

}  // namespace

std::string svg_scene(const PolygonScene& scene) {
  Box b;
  for (const Point& p : scene.outer) b.grow(dx(p.x), dx(p.y));
  std::ostringstream out;
  out << header(b);
  emit_ring(out, scene.outer, "fill=\"#eef\" stroke=\"#336\" stroke-width=\"0.5%\"");
  for (const auto& h : scene.holes)
    emit_ring(out, h, "fill=\"#fff\" stroke=\"#933\" stroke-width=\"0.5%\"");
  out << "</svg>\n";
  return out.str();
}

std::string svg_points(const std::vector<Point>& points, const std::vector<std::string>& labels) {
  Box b;
  for (const Point& p : points) b.grow(dx(p.x), dx(p.y));
  double r = 0.01 * std::max(b.maxx - b.minx, b.maxy - b.miny) + 1e-9;
  std::ostringstream out;
  out << header(b);
  for (size_t i = 0; i < points.size(); ++i) {
    double x = dx(points[i].x), y = -dx(points[i].y);
    out << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"" << r << "\" fill=\"#336\"/>\n";
    if (i < labels.size())
      out << "<text x=\"" << x + 1.5 * r << "\" y=\"" << y << "\" font-size=\"" << 4 * r
          << "\">" << labels[i] << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string svg_graph(const LabeledGraph& g) {
  int n = g.n();
  std::vector<std::pair<double, double>> pos(n);
  for (int i = 0; i < n; ++i) {
    double ang = 2 * M_PI * i / std::max(1, n);
    pos[i] = {std::cos(ang), std::sin(ang)};
  }
  Box b;
  b.grow(-1.2, -1.2);
  b.grow(1.2, 1.2);
  std::ostringstream out;
  out << header(b);
  for (auto [a, c] : g.edges())
    out << "<line x1=\"" << pos[a].first << "\" y1=\"" << -pos[a].second << "\" x2=\""
        << pos[c].first << "\" y2=\"" << -pos[c].second
        << "\" stroke=\"#888\" stroke-width=\"0.004\"/>\n";
  for (int i = 0; i < n; ++i) {
    out << "<circle cx=\"" << pos[i].first << "\" cy=\"" << -pos[i].second
        << "\" r=\"0.02\" fill=\"#336\"/>\n";
    out << "<text x=\"" << 1.06 * pos[i].first << "\" y=\"" << -1.06 * pos[i].second
        << "\" font-size=\"0.05\">" << g.vertices[i] << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace seqgeom
