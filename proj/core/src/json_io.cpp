#include "seqgeom/json_io.hpp"

#include "seqgeom/errors.hpp"

namespace seqgeom {

namespace {

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (j.is_string()) return rat_from_string(j.get<std::string>());
  throw ParseError("expected rational as integer or \"num/den\" string");
}

}  // namespace

Json point_to_json(const Point& p) {
  return Json::array({rat_to_string(p.x), rat_to_string(p.y)});
}

Point point_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw ParseError("point must be a two-element array");
  return {rat_from_json(j[0]), rat_from_json(j[1])};
}

Json points_to_json(const LabeledPoints& lp) {
  Json j;
  j["labels"] = lp.labels;
  Json pts = Json::array();
  for (const Point& p : lp.points) pts.push_back(point_to_json(p));
  j["points"] = pts;
  return j;
}

LabeledPoints points_from_json(const Json& j) {
  LabeledPoints lp;
  const Json& arr = j.contains("points") ? j.at("points") : j;
  if (!arr.is_array()) throw ParseError("expected a point array");
  for (const Json& pj : arr) lp.points.push_back(point_from_json(pj));
  if (j.is_object() && j.contains("labels")) {
    for (const Json& lj : j.at("labels"))
      lp.labels.push_back(lj.is_string() ? lj.get<std::string>() : lj.dump());
    if (lp.labels.size() != lp.points.size()) throw ParseError("labels/points size mismatch");
  } else {
    for (size_t i = 1; i <= lp.points.size(); ++i) lp.labels.push_back(std::to_string(i));
  }
  return lp;
}

Json chirotope_to_json(const Chirotope& c) {
  Json j;
  j["ground"] = c.ground();
  Json triples = Json::array();
  int n = c.size();
  for (int i = 0; i < n; ++i)
    for (int k = i + 1; k < n; ++k)
      for (int l = k + 1; l < n; ++l)
        triples.push_back(Json::array(
            {c.ground()[i], c.ground()[k], c.ground()[l], to_int(c.orient(i, k, l))}));
  j["triples"] = triples;
  return j;
}

Chirotope chirotope_from_json(const Json& j) {
  std::vector<std::string> ground;
  for (const Json& g : j.at("ground"))
    ground.push_back(g.is_string() ? g.get<std::string>() : g.dump());
  int n = static_cast<int>(ground.size());
  std::vector<int8_t> table(Chirotope::triple_count(n), 0);
  std::vector<bool> seen(table.size(), false);
  Chirotope probe(ground, table);  // index math
  auto index_of = [&](const Json& lj) {
    std::string l = lj.is_string() ? lj.get<std::string>() : lj.dump();
    for (int i = 0; i < n; ++i)
      if (ground[i] == l) return i;
    throw ParseError("triple references unknown label: " + l);
  };
  for (const Json& t : j.at("triples")) {
    if (!t.is_array() || t.size() != 4) throw ParseError("triple must be [a,b,c,sign]");
    int a = index_of(t[0]), b = index_of(t[1]), c = index_of(t[2]);
    int s = t[3].get<int>();
    if (s < -1 || s > 1) throw ParseError("triple sign must be -1, 0 or 1");
    if (!(a < b && b < c)) throw ParseError("triples must be listed in ground order");
    size_t idx = probe.triple_index(a, b, c);
    if (seen[idx]) throw ParseError("duplicate triple");
    seen[idx] = true;
    table[idx] = static_cast<int8_t>(s);
  }
  for (bool s : seen)
    if (!s) throw ParseError("triple table incomplete");
  return Chirotope(ground, table);
}

Json sequence_to_json(const AllowableSequence& a) {
  Json j;
  j["n"] = a.n;
  j["first"] = a.first;
  Json moves = Json::array();
  for (const Move& m : a.moves) {
    Json mv = Json::array();
    for (const Interval& iv : m.intervals) mv.push_back(Json::array({iv.start + 1, iv.len}));
    moves.push_back(mv);
  }
  j["moves"] = moves;
  return j;
}

AllowableSequence sequence_from_json(const Json& j) {
  AllowableSequence a;
  a.n = j.at("n").get<int>();
  a.first = j.at("first").get<std::vector<int>>();
  for (const Json& mj : j.at("moves")) {
    Move m;
    for (const Json& ij : mj) {
      if (!ij.is_array() || ij.size() != 2) throw ParseError("interval must be [start,len]");
      m.intervals.push_back({ij[0].get<int>() - 1, ij[1].get<int>()});
    }
    a.moves.push_back(std::move(m));
  }
  return a;
}

Json geometry_to_json(const ConvexGeometry& g) {
  Json j;
  j["ground"] = g.ground();
  Json fam = Json::array();
  for (uint32_t m : g.family()) fam.push_back(g.labels_of(m));
  j["family"] = fam;
  return j;
}

ConvexGeometry geometry_from_json(const Json& j) {
  std::vector<std::string> ground;
  for (const Json& g : j.at("ground"))
    ground.push_back(g.is_string() ? g.get<std::string>() : g.dump());
  std::vector<uint32_t> masks;
  ConvexGeometry probe(ground, {});
  for (const Json& s : j.at("family")) {
    std::vector<std::string> labels;
    for (const Json& l : s) labels.push_back(l.is_string() ? l.get<std::string>() : l.dump());
    masks.push_back(probe.mask_of(labels));
  }
  return ConvexGeometry(ground, masks);
}

Json scene_to_json(const PolygonScene& s) {
  Json j;
  Json outer = Json::array();
  for (const Point& p : s.outer) outer.push_back(point_to_json(p));
  j["outer"] = outer;
  Json holes = Json::array();
  for (const auto& h : s.holes) {
    Json ring = Json::array();
    for (const Point& p : h) ring.push_back(point_to_json(p));
    holes.push_back(ring);
  }
  j["holes"] = holes;
  return j;
}

PolygonScene scene_from_json(const Json& j) {
  PolygonScene s;
  for (const Json& pj : j.at("outer")) s.outer.push_back(point_from_json(pj));
  if (j.contains("holes"))
    for (const Json& hj : j.at("holes")) {
      std::vector<Point> ring;
      for (const Json& pj : hj) ring.push_back(point_from_json(pj));
      s.holes.push_back(std::move(ring));
    }
  return s;
}

Json graph_to_json(const LabeledGraph& g) {
  Json j;
  j["vertices"] = g.vertices;
  Json edges = Json::array();
  for (auto [a, b] : g.edges()) edges.push_back(Json::array({g.vertices[a], g.vertices[b]}));
  j["edges"] = edges;
  if (g.boundary_cycles) {
    Json cycles = Json::array();
    for (const auto& cyc : *g.boundary_cycles) {
      Json c = Json::array();
      for (int v : cyc) c.push_back(g.vertices[v]);
      cycles.push_back(c);
    }
    j["boundary_cycles"] = cycles;
  }
  return j;
}

LabeledGraph graph_from_json(const Json& j) {
  LabeledGraph g;
  std::vector<std::string> labels;
  for (const Json& v : j.at("vertices"))
    labels.push_back(v.is_string() ? v.get<std::string>() : v.dump());
  g.init(labels);
  for (const Json& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw ParseError("edge must be a label pair");
    int a = g.index_of(e[0].is_string() ? e[0].get<std::string>() : e[0].dump());
    int b = g.index_of(e[1].is_string() ? e[1].get<std::string>() : e[1].dump());
    if (a < 0 || b < 0) throw ParseError("edge references unknown vertex");
    g.set_edge(a, b);
  }
  if (j.contains("boundary_cycles")) {
    std::vector<std::vector<int>> cycles;
    for (const Json& cj : j.at("boundary_cycles")) {
      std::vector<int> cyc;
      for (const Json& v : cj) {
        int idx = g.index_of(v.is_string() ? v.get<std::string>() : v.dump());
        if (idx < 0) throw ParseError("cycle references unknown vertex");
        cyc.push_back(idx);
      }
      cycles.push_back(std::move(cyc));
    }
    g.boundary_cycles = cycles;
  }
  return g;
}

Json search_result_to_json(const GridSearchResult& r) {
  Json j;
  j["found"] = r.found;
  j["searched_up_to"] = r.searched_up_to;
  if (r.found) {
    Json pts = Json::array();
    for (const Point& p : r.points) pts.push_back(point_to_json(p));
    j["points"] = pts;
  } else {
    j["note"] = "not found up to the searched grid: evidence, not proof of non-realizability";
  }
  return j;
}

std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace seqgeom
