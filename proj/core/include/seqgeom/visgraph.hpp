#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "seqgeom/allowseq.hpp"
#include "seqgeom/exact.hpp"

namespace seqgeom {

// Polygon with holes: outer ring counterclockwise, hole rings clockwise.
struct PolygonScene {
  std::vector<Point> outer;
  std::vector<std::vector<Point>> holes;
};

void validate_scene(const PolygonScene& scene);  // throws InvalidScene

struct LabeledGraph {
  std::vector<std::string> vertices;
  std::vector<uint8_t> adj;  // n*n, symmetric, zero diagonal
  std::optional<std::vector<std::vector<int>>> boundary_cycles;

  int n() const { return static_cast<int>(vertices.size()); }
  void init(std::vector<std::string> labels);
  int index_of(const std::string& label) const;  // -1 if absent
  bool has_edge(int i, int j) const { return adj[static_cast<size_t>(i) * n() + j] != 0; }
  void set_edge(int i, int j, bool present = true);
  size_t edge_count() const;
  std::vector<std::pair<int, int>> edges() const;  // i<j, sorted
};

// Exact visibility graph: vertices in ring order (outer first, then holes),
// labeled by position; ring edges always present; otherwise the open segment
// must be unblocked and its midpoint inside the closed domain.
LabeledGraph visibility_graph(const PolygonScene& scene);

// Vertex roles of the G_A construction, per move and per element.
struct GadgetMap {
  // For move m (0-based): vertex labels of the left/right interval, in
  // counterclockwise cycle order (left: diagonal, switch, lowers descending;
  // right: lowers ascending, switch, diagonal).
  std::vector<std::vector<std::string>> left_interval;
  std::vector<std::vector<std::string>> right_interval;
  // Hole triple per element (1-based): top, obtuse, bottom.
  std::map<int, std::array<std::string, 3>> hole;
};

struct GaResult {
  LabeledGraph graph;
  GadgetMap map;
};

// The graph G_A of a simple allowable sequence: outer cycle of
// 2*C(n,2)*(2n+1) vertices plus n triangle holes, with the switch-vertex and
// diagonal-vertex missing-edge rules and the hole visibility rules.
GaResult build_ga(const AllowableSequence& a);  // throws NotSimple

// G_A': every outer cycle edge subdivided. The subdivision vertex is hosted
// at the ccw-first endpoint of its edge and adopts that corner's visibility.
LabeledGraph subdivide_ga(const GaResult& ga);

struct VgRealization {
  PolygonScene scene;
  std::vector<std::string> scene_vertex_labels;  // by ring position, outer then holes
  AllowableSequence sequence;
};

// Lemma-5 style realization: a large rational circle frame with one interval
// per switch side, triangle holes on the points, parameters adapted until
// visibility_graph(scene) equals build_ga exactly. Throws AdaptationFailed.
VgRealization realize_ga(const std::vector<Point>& points);

// Pocket subdivision of a realized scene; labels extend with w<edge-index>.
VgRealization subdivide_realization(const VgRealization& real);

struct GraphDiff {
  bool equal = false;
  size_t missing_in_second = 0, extra_in_second = 0;
  std::vector<std::string> mismatches;  // first 10, human readable
};

// Edge-set equality of g1 and g2 under the label bijection g1->g2.
GraphDiff verify_labeled_equal(const LabeledGraph& g1, const LabeledGraph& g2,
                               const std::map<std::string, std::string>& bijection);

}  // namespace seqgeom
