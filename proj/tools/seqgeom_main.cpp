#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "seqgeom/errors.hpp"
#include "seqgeom/json_io.hpp"
#include "seqgeom/svg.hpp"
#include "seqgeom/universality.hpp"

namespace sg = seqgeom;

namespace {

// Exit codes: 0 verified / success, 1 verified-false, 2 usage or IO error.
constexpr int kOk = 0;
constexpr int kVerifiedFalse = 1;
constexpr int kUsage = 2;

std::string read_input(const std::string& path) {
  if (path == "-" || path.empty()) {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw sg::Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path == "-" || path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw sg::Error("cannot open " + path);
  out << text;
}

sg::Json read_json(const std::string& path) { return sg::Json::parse(read_input(path)); }

int cmd_validate(const std::string& kind, const std::string& input) {
  sg::Json j = read_json(input);
  sg::Json report;
  bool ok = true;
  if (kind == "seq") {
    sg::ValidationReport rep = sg::validate(sg::sequence_from_json(j));
    report["generalized_ok"] = rep.generalized_ok;
    report["simple"] = rep.simple;
    report["violations"] = rep.violations;
    ok = rep.generalized_ok;
  } else if (kind == "ot") {
    sg::Chirotope c = sg::chirotope_from_json(j);
    sg::AxiomReport rep = c.check_axioms();
    report["identically_zero"] = rep.identically_zero;
    report["total_violations"] = rep.total_violations;
    sg::Json sample = sg::Json::array();
    for (const auto& v : rep.sample) {
      sg::Json item;
      item["axiom"] = v.axiom;
      item["tuple"] = v.tuple;
      sample.push_back(item);
    }
    report["violations"] = sample;
    ok = rep.ok();
  } else if (kind == "cg") {
    sg::ConvexGeometry g = sg::geometry_from_json(j);
    sg::CgAxiomReport rep = sg::check_cg_axioms(g);
    report["total_violations"] = rep.total_violations;
    sg::Json sample = sg::Json::array();
    for (const auto& v : rep.sample) {
      sg::Json item;
      item["axiom"] = v.axiom;
      item["subject"] = g.labels_of(v.subject);
      sample.push_back(item);
    }
    report["violations"] = sample;
    ok = rep.ok();
  } else if (kind == "graph") {
    sg::LabeledGraph g = sg::graph_from_json(j);
    report["vertices"] = g.n();
    report["edges"] = g.edge_count();
    ok = true;
  } else {
    std::cerr << "unknown validate kind: " << kind << "\n";
    return kUsage;
  }
  std::cout << sg::dump_canonical(report);
  return ok ? kOk : kVerifiedFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact toolkit for allowable sequences, order types, convex geometries and "
               "polygon visibility graphs"};
  app.require_subcommand(1);
  std::string input = "-", output = "-";
  unsigned seed = 0;
  app.add_option("--seed", seed, "seed for randomized corpus generation");

  std::string kind;
  auto* validate = app.add_subcommand("validate", "validate {seq|ot|cg|graph} from JSON");
  validate->add_option("kind", kind)->required();
  validate->add_option("input", input);

  auto* extract = app.add_subcommand("extract", "allowable sequence of a point set");
  extract->add_option("input", input);

  auto* induce = app.add_subcommand("induce", "induced order type of a sequence");
  induce->add_option("input", input);

  std::string reduce_kind;
  auto* reduce = app.add_subcommand("reduce", "reduce {seq|cg|vg}");
  reduce->add_option("kind", reduce_kind)->required();
  reduce->add_option("input", input);

  std::string realize_kind;
  auto* realize = app.add_subcommand("realize", "realize {ot|vg}");
  realize->add_option("kind", realize_kind)->required();
  realize->add_option("input", input);

  std::string order_csv;
  auto* simplify = app.add_subcommand("simplify", "constructible to simple sequence");
  simplify->add_option("input", input);
  simplify->add_option("--order", order_csv, "construction order, comma separated");

  bool vg_check = false;
  auto* visg = app.add_subcommand("visgraph", "visibility graph of a scene");
  visg->add_option("input", input);
  visg->add_flag("--check", vg_check, "only validate the scene and report");

  int ring_k = 4;
  auto* ring = app.add_subcommand("ring", "double ring point set");
  ring->add_option("--k", ring_k, "line count")->required();

  std::string target_path;
  int grid = 3;
  bool relabel = false;
  auto* search = app.add_subcommand("search", "grid search for a realization");
  search->add_option("--target", target_path, "target chirotope or sequence JSON")->required();
  search->add_option("--grid", grid, "grid size (max 15)");
  search->add_flag("--relabel", relabel, "allow relabeling the target");

  std::string svg_kind = "auto";
  auto* svg = app.add_subcommand("svg", "render points, a scene or a graph to SVG");
  svg->add_option("input", input);
  svg->add_option("--out", output, "output path");

  for (auto* sc : {extract, induce, simplify, visg}) sc->add_option("--out", output);
  reduce->add_option("--out", output);
  realize->add_option("--out", output);
  ring->add_option("--out", output);
  search->add_option("--out", output);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*validate) return cmd_validate(kind, input);
    if (*extract) {
      sg::LabeledPoints lp = sg::points_from_json(read_json(input));
      write_output(output, sg::dump_canonical(sg::sequence_to_json(sg::extract_from_points(lp.points))));
      return kOk;
    }
    if (*induce) {
      sg::AllowableSequence a = sg::sequence_from_json(read_json(input));
      write_output(output, sg::dump_canonical(sg::chirotope_to_json(sg::induced_chirotope(a))));
      return kOk;
    }
    if (*reduce) {
      if (reduce_kind == "seq") {
        sg::NormalForm nf = sg::parse_normal_form(read_input(input));
        write_output(output, sg::dump_canonical(sg::sequence_to_json(sg::build_sequence(nf))));
        return kOk;
      }
      if (reduce_kind == "cg") {
        sg::AllowableSequence a = sg::sequence_from_json(read_json(input));
        write_output(output,
                     sg::dump_canonical(sg::chirotope_to_json(sg::reduce_to_order_type(a))));
        return kOk;
      }
      if (reduce_kind == "vg") {
        sg::AllowableSequence a = sg::sequence_from_json(read_json(input));
        sg::GaResult ga = sg::build_ga(a);
        write_output(output, sg::dump_canonical(sg::graph_to_json(ga.graph)));
        return kOk;
      }
      std::cerr << "unknown reduce kind: " << reduce_kind << "\n";
      return kUsage;
    }
    if (*realize) {
      if (realize_kind == "ot") {
        sg::NormalForm nf = sg::parse_normal_form(read_input(input));
        sg::Realization r = sg::realize_induced_order_type(nf);
        write_output(output, sg::dump_canonical(sg::points_to_json({r.labels, r.points})));
        return kOk;
      }
      if (realize_kind == "vg") {
        sg::LabeledPoints lp = sg::points_from_json(read_json(input));
        sg::VgRealization r = sg::realize_ga(lp.points);
        sg::Json j = sg::scene_to_json(r.scene);
        j["vertex_labels"] = r.scene_vertex_labels;
        write_output(output, sg::dump_canonical(j));
        return kOk;
      }
      std::cerr << "unknown realize kind: " << realize_kind << "\n";
      return kUsage;
    }
    if (*simplify) {
      sg::AllowableSequence a = sg::sequence_from_json(read_json(input));
      std::vector<int> order;
      if (order_csv.empty()) {
        for (int e = 1; e <= a.n; ++e) order.push_back(e);
      } else {
        std::istringstream ss(order_csv);
        std::string tok;
        while (std::getline(ss, tok, ',')) order.push_back(std::stoi(tok));
      }
      write_output(output,
                   sg::dump_canonical(sg::sequence_to_json(sg::simplify_sequence(a, order))));
      return kOk;
    }
    if (*visg) {
      sg::PolygonScene scene = sg::scene_from_json(read_json(input));
      if (vg_check) {
        sg::validate_scene(scene);
        std::cout << "scene ok\n";
        return kOk;
      }
      write_output(output, sg::dump_canonical(sg::graph_to_json(sg::visibility_graph(scene))));
      return kOk;
    }
    if (*ring) {
      sg::DoubleRing dr = sg::double_ring(ring_k);
      write_output(output, sg::dump_canonical(sg::points_to_json({dr.labels, dr.points})));
      return kOk;
    }
    if (*search) {
      sg::Json tj = read_json(target_path);
      sg::GridSearchSpec spec;
      spec.grid_size = grid;
      spec.relabel = relabel;
      if (tj.contains("triples"))
        spec.target = sg::chirotope_from_json(tj);
      else
        spec.target = sg::sequence_from_json(tj);
      sg::GridSearchResult res = sg::grid_search(spec);
      write_output(output, sg::dump_canonical(sg::search_result_to_json(res)));
      return res.found ? kOk : kVerifiedFalse;
    }
    if (*svg) {
      sg::Json j = read_json(input);
      std::string rendered;
      if (j.contains("outer"))
        rendered = sg::svg_scene(sg::scene_from_json(j));
      else if (j.contains("edges"))
        rendered = sg::svg_graph(sg::graph_from_json(j));
      else {
        sg::LabeledPoints lp = sg::points_from_json(j);
        rendered = sg::svg_points(lp.points, lp.labels);
      }
      write_output(output, rendered);
      return kOk;
    }
  } catch (const sg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const sg::Json::exception& e) {
    std::cerr << "json error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
