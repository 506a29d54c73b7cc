#pragma once

#include <json.hpp>

#include "seqgeom/allowseq.hpp"
#include "seqgeom/chirotope.hpp"
#include "seqgeom/convexgeom.hpp"
#include "seqgeom/grid_search.hpp"
#include "seqgeom/visgraph.hpp"

namespace seqgeom {

using Json = nlohmann::json;

// Rationals serialize as canonical "num/den" strings, points as pairs.
Json point_to_json(const Point& p);
Point point_from_json(const Json& j);

struct LabeledPoints {
  std::vector<std::string> labels;
  std::vector<Point> points;
};
Json points_to_json(const LabeledPoints& lp);
LabeledPoints points_from_json(const Json& j);  // labels default to "1".."n"

Json chirotope_to_json(const Chirotope& c);
Chirotope chirotope_from_json(const Json& j);

Json sequence_to_json(const AllowableSequence& a);  // 1-based interval starts
AllowableSequence sequence_from_json(const Json& j);

Json geometry_to_json(const ConvexGeometry& g);
ConvexGeometry geometry_from_json(const Json& j);

Json scene_to_json(const PolygonScene& s);
PolygonScene scene_from_json(const Json& j);

Json graph_to_json(const LabeledGraph& g);
LabeledGraph graph_from_json(const Json& j);

Json search_result_to_json(const GridSearchResult& r);

// Canonical text: sorted keys, two-space indent, trailing newline.
std::string dump_canonical(const Json& j);

}  // namespace seqgeom
