#pragma once

#include <string>

#include "seqgeom/visgraph.hpp"

namespace seqgeom {

// Static SVG 1.1 renderings; coordinates are converted to doubles for
// presentation only, the core never consumes them.
std::string svg_scene(const PolygonScene& scene);
std::string svg_points(const std::vector<Point>& points, const std::vector<std::string>& labels);
std::string svg_graph(const LabeledGraph& g);  // circular layout

}  // namespace seqgeom
