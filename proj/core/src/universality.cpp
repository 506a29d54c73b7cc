#include "seqgeom/universality.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "seqgeom/errors.hpp"
#include "seqgeom/ordfield.hpp"
#include "seqgeom/sweep.hpp"

namespace seqgeom {

// ---------------------------------------------------------------- parsing

NormalForm parse_normal_form(std::string_view text) {
  NormalForm nf;
  std::istringstream in{std::string(text)};
  std::string line;
  auto parse_var = [](const std::string& tok) {
    if (tok.size() < 2 || tok[0] != 'x') throw ParseError("expected variable, got: " + tok);
    for (size_t i = 1; i < tok.size(); ++i)
      if (!isdigit(static_cast<unsigned char>(tok[i])))
        throw ParseError("expected variable, got: " + tok);
    int v = std::stoi(tok.substr(1));
    if (v < 1) throw ParseError("variable index must be positive: " + tok);
    return v;
  };
  int max_var = 1;
  int declared_vars = 0;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<std::string> tok;
    std::string t;
    while (ls >> t) tok.push_back(t);
    if (tok.empty() || tok[0][0] == '#') continue;
    if (tok[0] == "vars") {
      if (tok.size() != 2) throw ParseError("vars header needs one count");
      declared_vars = std::stoi(tok[1]);
      continue;
    }
    if (tok.size() != 5 || tok[1] != "=" || (tok[3] != "+" && tok[3] != "*"))
      throw ParseError("expected 'xk = xi + xj' or 'xk = xi * xj': " + line);
    NormalForm::Constraint c;
    c.k = parse_var(tok[0]);
    c.i = parse_var(tok[2]);
    c.j = parse_var(tok[4]);
    c.kind = tok[3] == "+" ? NormalForm::Constraint::Kind::Add : NormalForm::Constraint::Kind::Mul;
    if (c.i > c.j) std::swap(c.i, c.j);
    nf.constraints.push_back(c);
    max_var = std::max({max_var, c.i, c.j, c.k});
  }
  nf.n_vars = std::max({max_var, declared_vars, 1});
  std::vector<bool> is_output(nf.n_vars + 1, false);
  for (const auto& c : nf.constraints) {
    if (!(1 <= c.i && c.i <= c.j && c.j < c.k && c.k <= nf.n_vars))
      throw InvariantViolation("constraint indices must satisfy 1 <= i <= j < k <= n");
    if (c.kind == NormalForm::Constraint::Kind::Mul && c.i == 1)
      throw InvariantViolation("x1 * xj = xk forces xk = xj, breaking the strict order");
    if (is_output[c.k])
      throw InvariantViolation("x" + std::to_string(c.k) + " is the output of two constraints");
    is_output[c.k] = true;
  }
  return nf;
}

std::string normal_form_to_string(const NormalForm& nf) {
  std::ostringstream out;
  out << "vars " << nf.n_vars << "\n";
  for (const auto& c : nf.constraints)
    out << "x" << c.k << " = x" << c.i << (c.kind == NormalForm::Constraint::Kind::Add ? " + " : " * ")
        << "x" << c.j << "\n";
  return out.str();
}

void check_witness(const NormalForm& nf, const Witness& w) {
  if (static_cast<int>(w.values.size()) != nf.n_vars)
    throw UnsatisfiedWitness("witness length mismatch");
  if (w.values[0] != 1) throw UnsatisfiedWitness("x1 must equal 1");
  for (int v = 1; v < nf.n_vars; ++v)
    if (!(w.values[v - 1] < w.values[v]))
      throw UnsatisfiedWitness("witness values must strictly increase");
  for (const auto& c : nf.constraints) {
    Rat lhs;
    if (c.kind == NormalForm::Constraint::Kind::Add)
      lhs = w.values[c.i - 1] + w.values[c.j - 1];
    else
      lhs = w.values[c.i - 1] * w.values[c.j - 1];
    if (lhs != w.values[c.k - 1])
      throw UnsatisfiedWitness("constraint for x" + std::to_string(c.k) + " violated");
  }
}

// ------------------------------------------------- gadget layout over Q(w)

namespace {

using F = OmegaRat;
using FPoint = SweepPoint<F>;

struct FieldLayout {
  std::vector<std::string> labels;
  std::vector<FPoint> points;
  struct Gadget {
    NormalForm::Constraint constraint;
    std::map<std::string, int> role_index;
  };
  std::vector<Gadget> gadgets;
};

int coord_mag(const F& v) { return v.is_zero() ? 0 : std::abs(v.degree()); }

// Gadgets in placement order: additions by decreasing y-variable, then
// multiplications.
std::vector<int> gadget_order(const NormalForm& nf) {
  std::vector<int> adds, muls;
  for (size_t i = 0; i < nf.constraints.size(); ++i)
    (nf.constraints[i].kind == NormalForm::Constraint::Kind::Add ? adds : muls)
        .push_back(static_cast<int>(i));
  std::stable_sort(adds.begin(), adds.end(), [&](int a, int b) {
    return nf.constraints[a].j > nf.constraints[b].j;
  });
  adds.insert(adds.end(), muls.begin(), muls.end());
  return adds;
}

FieldLayout layout_over_field(const NormalForm& nf, const std::vector<F>& vals) {
  FieldLayout L;
  auto add_point = [&](const std::string& label, F x, F y) {
    L.labels.push_back(label);
    L.points.push_back({std::move(x), std::move(y)});
    return static_cast<int>(L.points.size()) - 1;
  };
  add_point("O", F(0), F(0));
  add_point("X", F(1), F(0));
  add_point("Y", F(0), F(1));
  add_point("A", F(1), F(1));

  int maxmag = 1;
  for (const F& v : vals) maxmag = std::max(maxmag, coord_mag(v));

  int tag = 0;
  for (int ci : gadget_order(nf)) {
    const auto& c = nf.constraints[ci];
    ++tag;
    std::string g = "g" + std::to_string(tag);
    const F& x = vals[c.i - 1];
    const F& y = vals[c.j - 1];
    int P = 2 * maxmag + 2;
    F N = F::omega_pow(P);
    FieldLayout::Gadget gd;
    gd.constraint = c;
    if (c.kind == NormalForm::Constraint::Kind::Add) {
      gd.role_index["a"] = add_point(g + ".a", -N, F(0));
      gd.role_index["c"] = add_point(g + ".c", F(0), x * N);
      gd.role_index["d"] = add_point(g + ".d", -N, -(y * N));
    } else {
      F v = -F::omega_pow(-(P + 2 * maxmag + 2));
      F u = -N + v;
      gd.role_index["a"] = add_point(g + ".a", -N, F(0));
      gd.role_index["b"] = add_point(g + ".b", u - v / x, F(0));
      gd.role_index["c"] = add_point(g + ".c", u, v);
      gd.role_index["d"] = add_point(g + ".d", u, y * v);
    }
    for (const auto& [role, idx] : gd.role_index) {
      maxmag = std::max(maxmag, coord_mag(L.points[idx].x));
      maxmag = std::max(maxmag, coord_mag(L.points[idx].y));
    }
    L.gadgets.push_back(std::move(gd));
  }
  return L;
}

std::vector<F> default_field_witness(const NormalForm& nf) {
  std::vector<F> vals(nf.n_vars);
  vals[0] = F(1);
  std::vector<const NormalForm::Constraint*> producer(nf.n_vars + 1, nullptr);
  for (const auto& c : nf.constraints) producer[c.k] = &c;
  int free_power = 0;
  for (int v = 2; v <= nf.n_vars; ++v) {
    if (const auto* c = producer[v]) {
      vals[v - 1] = c->kind == NormalForm::Constraint::Kind::Add
                        ? vals[c->i - 1] + vals[c->j - 1]
                        : vals[c->i - 1] * vals[c->j - 1];
      free_power = std::max(free_power, coord_mag(vals[v - 1]));
    } else {
      ++free_power;
      vals[v - 1] = F::omega_pow(free_power);
    }
  }
  for (int v = 1; v < nf.n_vars; ++v)
    if (!(vals[v - 1] < vals[v]))
      throw InvariantViolation(
          "no order-consistent value assignment found for the normal form; the symbolic builder "
          "requires the variable order to be satisfiable at large scales");
  return vals;
}

std::vector<Point> substitute(const FieldLayout& L, const Rat& w0) {
  std::vector<Point> pts;
  pts.reserve(L.points.size());
  for (const FPoint& fp : L.points) pts.push_back({fp.x.eval(w0), fp.y.eval(w0)});
  return pts;
}

}  // namespace

AllowableSequence build_sequence(const NormalForm& nf) {
  FieldLayout L = layout_over_field(nf, default_field_witness(nf));
  return extract_sweep(L.points);
}

GadgetLayout place_gadgets(const NormalForm& nf, const Witness& w) {
  check_witness(nf, w);
  std::vector<F> vals;
  vals.reserve(w.values.size());
  for (const Rat& r : w.values) vals.emplace_back(r);
  FieldLayout L = layout_over_field(nf, vals);
  AllowableSequence target = extract_sweep(L.points);

  Rat w0 = Rat(1) << 16;
  for (int attempt = 0; attempt < 8; ++attempt, w0 = w0 * w0) {
    std::vector<Point> pts = substitute(L, w0);
    bool ok = true;
    try {
      ok = extract_from_points(pts) == target;
    } catch (const Error&) {
      ok = false;
    }
    if (!ok) continue;
    GadgetLayout out;
    out.labels = L.labels;
    out.points = std::move(pts);
    out.values = w.values;
    out.omega = w0;
    for (const auto& gd : L.gadgets) {
      GadgetLayout::Gadget g;
      g.constraint = gd.constraint;
      for (const auto& [role, idx] : gd.role_index) g.points[role] = out.points[idx];
      out.gadgets.push_back(std::move(g));
    }
    return out;
  }
  throw ConstructionFailure("place_gadgets: no substitution matched the symbolic sequence");
}

std::vector<std::string> gadget_incidence_violations(const GadgetLayout& layout) {
  std::vector<std::string> out;
  auto slope_is = [](const Point& from, const Point& to, const Rat& s) {
    return to.y - from.y == s * (to.x - from.x);
  };
  for (size_t gi = 0; gi < layout.gadgets.size(); ++gi) {
    const auto& g = layout.gadgets[gi];
    auto fail = [&](const std::string& what) {
      out.push_back("gadget " + std::to_string(gi + 1) + ": " + what);
    };
    const Point O{Rat(0), Rat(0)};
    const Rat& x = layout.values[g.constraint.i - 1];
    const Rat& y = layout.values[g.constraint.j - 1];
    const Rat& z = layout.values[g.constraint.k - 1];
    if (g.constraint.kind == NormalForm::Constraint::Kind::Add) {
      const Point &a = g.points.at("a"), &c = g.points.at("c"), &d = g.points.at("d");
      if (a.y != 0) fail("a off the base axis");
      if (c.x != 0) fail("c off the vertical axis");
      if (d.x != a.x) fail("d not vertically aligned with a");
      if (!slope_is(a, c, x)) fail("a-c line misses the x direction");
      if (!slope_is(d, O, y)) fail("d-0 line misses the y direction");
      if (!slope_is(d, c, z)) fail("d-c line misses the output direction");
    } else {
      const Point &a = g.points.at("a"), &b = g.points.at("b");
      const Point &c = g.points.at("c"), &d = g.points.at("d");
      if (a.y != 0 || b.y != 0) fail("a/b off the base axis");
      if (c.x != d.x) fail("c-d not vertical");
      if (!slope_is(c, a, Rat(1))) fail("c-a line misses the unit direction");
      if (!slope_is(d, a, y)) fail("d-a line misses the y direction");
      if (!slope_is(c, b, x)) fail("c-b line misses the x direction");
      if (!slope_is(d, b, z)) fail("d-b line misses the output direction");
    }
  }
  return out;
}

Realization realize_induced_order_type(const NormalForm& nf) {
  AllowableSequence seq = build_sequence(nf);
  Chirotope induced = induced_chirotope(seq);

  std::vector<F> vals(nf.n_vars);
  vals[0] = F(1);
  Rat s(2);
  for (int v = 2; v <= nf.n_vars; ++v) {
    s *= 3;  // order-respecting surrogates 2*3^v, collision-free with sums
    vals[v - 1] = F(s);
  }
  FieldLayout L = layout_over_field(nf, vals);
  int m = static_cast<int>(L.points.size());
  // Field-level chirotope must already match the induced one.
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      for (int k = j + 1; k < m; ++k) {
        F det = (L.points[j].x - L.points[i].x) * (L.points[k].y - L.points[i].y) -
                (L.points[j].y - L.points[i].y) * (L.points[k].x - L.points[i].x);
        if (det.sign() != to_int(induced.orient(i, j, k)))
          throw ConstructionFailure("realize_induced_order_type: surrogate layout disagrees with "
                                    "the induced order type at a triple");
      }
  Rat w0 = Rat(1) << 16;
  for (int attempt = 0; attempt < 8; ++attempt, w0 = w0 * w0) {
    std::vector<Point> pts = substitute(L, w0);
    bool distinct = true;
    for (int i = 0; i < m && distinct; ++i)
      for (int j = i + 1; j < m && distinct; ++j)
        if (pts[i] == pts[j]) distinct = false;
    if (!distinct) continue;
    if (Chirotope::from_points(L.labels, pts).table() == induced.table())
      return {L.labels, std::move(pts)};
  }
  throw ConstructionFailure("realize_induced_order_type: substitution did not stabilize");
}

// ------------------------------------------------------------- simplify

namespace {

Point rot90(const Point& v) { return {-v.y, v.x}; }

std::vector<int> seq_code(const AllowableSequence& a) {
  std::vector<int> code;
  code.push_back(a.n);
  code.insert(code.end(), a.first.begin(), a.first.end());
  for (const Move& m : a.moves) {
    code.push_back(static_cast<int>(m.intervals.size()));
    for (const Interval& iv : m.intervals) {
      code.push_back(iv.start);
      code.push_back(iv.len);
    }
  }
  return code;
}

// Line direction normalized to angle in [0, 180).
Point line_dir(const Point& from, const Point& to) {
  Point v{to.x - from.x, to.y - from.y};
  if (v.y < 0 || (v.y == 0 && v.x < 0)) {
    v.x = -v.x;
    v.y = -v.y;
  }
  return v;
}

// Switch direction of a pair, normalized to angle in (0, 180].
Point pair_switch_dir(const Point& a, const Point& b) {
  Point u{-(b.y - a.y), b.x - a.x};
  if (u.y < 0 || (u.y == 0 && u.x > 0)) {
    u.x = -u.x;
    u.y = -u.y;
  }
  return u;
}

// true if a fires strictly earlier than b in the (0,180] sweep.
bool switch_before(const Point& a, const Point& b) { return det2(a, b) > 0; }

// Almost-parallelogram around `center`, long in the u1 direction, with the
// near pair much closer to the u1 line. The four off-line offsets are
// pairwise separated by a factor lam, so every switch-order comparison in
// the replacement is decided by the construction scales alone; distances of
// the surrounding points never tip a comparison.
std::array<Point, 4> parallelogram_corners(const Point& center, const Point& u1, const Point& u2,
                                           const Rat& lam) {
  Rat l2 = lam * lam;
  Rat l3 = l2 * lam;
  Rat l4 = l3 * lam;
  Rat l5 = l4 * lam;
  Rat l6 = l5 * lam, l7 = l6 * lam, l8 = l7 * lam;
  auto at = [&](const Rat& s1, const Rat& s2) {
    return Point{center.x + s1 * u1.x + s2 * u2.x, center.y + s1 * u1.y + s2 * u2.y};
  };
  // The u1 extents are perturbed at scales below every ordering decision so
  // that no corner pair is exactly parallel to either axis.
  return {at(lam, l4), at(-lam * (1 - l6), l5), at(-lam, -l2), at(lam * (1 - l7), -l3)};
}

// Clean second axis for the one-line case: just after u1 among the pencil
// directions seen from the replaced point.
Point phantom_axis(const Point& u1, const std::vector<Point>& pencil_dirs) {
  Rat tau(1, 4096);
  for (int tries = 0; tries < 64; ++tries, tau /= 16) {
    Point cand{u1.x + tau * (-u1.y), u1.y + tau * u1.x};
    bool flipped = cand.y < 0 || (cand.y == 0 && cand.x < 0);
    if (flipped) continue;  // wrapped past 180; shrink further
    bool clean = true;
    for (const Point& w : pencil_dirs) {
      if (det2(u1, w) == 0) continue;
      if (det2(w, cand) == 0 || (det2(u1, w) > 0 && det2(w, cand) > 0)) {
        clean = false;
        break;
      }
    }
    if (clean) return cand;
  }
  throw NotConstructible("could not separate a phantom axis from the pencil");
}

// Genericity of a replacement inside a configuration: no new collinearity,
// no repeated pair direction, and the replaced location inside the hull of
// the corners.
bool replacement_generic(const std::vector<Point>& others, const std::array<Point, 4>& corners,
                         const Point& center) {
  std::vector<Point> all(others.begin(), others.end());
  all.insert(all.end(), corners.begin(), corners.end());
  size_t base = others.size();
  for (size_t i = 0; i < all.size(); ++i)
    for (size_t j = i + 1; j < all.size(); ++j) {
      if (all[i] == all[j]) return false;
      for (size_t k = j + 1; k < all.size(); ++k)
        if (k >= base && orientation(all[i], all[j], all[k]) == Sign::Zero) return false;
    }
  // Pair directions involving a corner must differ from every other pair
  // direction: the replacement de-parallelizes its point.
  std::vector<std::pair<Point, bool>> dirs;  // direction, involves-a-corner
  for (size_t i = 0; i < all.size(); ++i)
    for (size_t j = i + 1; j < all.size(); ++j)
      dirs.push_back({line_dir(all[i], all[j]), j >= base});
  for (size_t i = 0; i < dirs.size(); ++i)
    for (size_t j = i + 1; j < dirs.size(); ++j)
      if ((dirs[i].second || dirs[j].second) && det2(dirs[i].first, dirs[j].first) == 0)
        return false;
  if (!point_in_hull(center, std::span<const Point>(corners.data(), corners.size()))) return false;
  return true;
}

struct PairInfo {
  int move = -1;          // move index of the pair's reversal
  bool after = false;     // q after p in the pre-move permutation
  int line_rank = 0;      // distance along the shared interval
};

// Everything simplify needs to know about the pencil at element p.
struct Pencil {
  std::vector<int> others;             // element ids != p
  std::map<int, PairInfo> info;        // per other element
  std::vector<std::vector<int>> lines; // intervals through p with >=3 members
};

Pencil analyze_pencil(const AllowableSequence& a, int p) {
  Pencil pen;
  std::vector<std::vector<int>> perms = permutations(a);
  for (size_t mi = 0; mi < a.moves.size(); ++mi) {
    if (a.moves[mi].intervals.size() != 1)
      throw NotConstructible("simplify_sequence: parallel switches are not supported");
    const Interval& iv = a.moves[mi].intervals[0];
    const std::vector<int>& perm = perms[mi];
    int ppos = -1;
    for (int t = iv.start; t < iv.start + iv.len; ++t)
      if (perm[t] == p) ppos = t;
    if (ppos < 0) continue;
    std::vector<int> members;
    for (int t = iv.start; t < iv.start + iv.len; ++t)
      if (perm[t] != p) {
        members.push_back(perm[t]);
        PairInfo pi;
        pi.move = static_cast<int>(mi);
        pi.after = t > ppos;
        pi.line_rank = std::abs(t - ppos);
        pen.info[perm[t]] = pi;
        pen.others.push_back(perm[t]);
      }
    if (iv.len >= 3) pen.lines.push_back(members);
  }
  std::sort(pen.others.begin(), pen.others.end());
  return pen;
}

}  // namespace

AllowableSequence simplify_sequence(const AllowableSequence& a, const std::vector<int>& order) {
  ValidationReport rep = validate(a);
  if (!rep.generalized_ok) throw InvalidSequence("simplify_sequence: invalid sequence");
  if (rep.simple) return a;
  if (static_cast<int>(order.size()) != a.n)
    throw NotConstructible("construction order must list every element");

  AllowableSequence cur = a;
  std::vector<int> ord = order;  // current element ids, construction order

  for (int step = static_cast<int>(ord.size()) - 1; step >= 0; --step) {
    int p = ord[step];
    Pencil pen = analyze_pencil(cur, p);
    if (pen.lines.size() > 2)
      throw NotConstructible("element " + std::to_string(p) + " lies on three spanned lines");
    if (pen.lines.empty()) continue;

    int K = static_cast<int>(cur.moves.size());
    // Nominal slot directions: rational points strictly inside (0,180) in
    // sweep order; only the order matters.
    std::vector<Point> slot(K);
    for (int m = 0; m < K; ++m) {
      double theta = M_PI * (m + 1) / (K + 1);
      double t = std::tan(theta / 2);
      Rat tq = make_rat(static_cast<long>(std::llround(t * (1 << 20))), 1 << 20);
      slot[m] = {1 - tq * tq, 2 * tq};  // switch direction, angle in (0,180)
    }
    // Surrogate positions for the other elements around p at the origin.
    Point center{Rat(0), Rat(0)};
    std::map<int, Point> spos;
    for (int q : pen.others) {
      const PairInfo& pi = pen.info.at(q);
      Point ldir = rot90(slot[pi.move]);
      Rat r = 1 + make_rat(pi.line_rank - 1, 8);
      Rat sgn_q = pi.after ? Rat(-1) : Rat(1);
      spos[q] = {center.x + sgn_q * r * ldir.x, center.y + sgn_q * r * ldir.y};
    }
    // Line axes.
    auto line_axis = [&](const std::vector<int>& mates) {
      return line_dir(center, spos.at(mates.front()));
    };
    Point u1 = line_axis(pen.lines[0]);
    Point u2;
    if (pen.lines.size() == 2) {
      u2 = line_axis(pen.lines[1]);
    } else {
      std::vector<Point> pencil_dirs;
      for (int q : pen.others) pencil_dirs.push_back(line_dir(center, spos.at(q)));
      u2 = phantom_axis(u1, pencil_dirs);
    }

    struct Sw {
      Point dir;
      std::vector<int> members;  // new element ids
    };
    auto remap = [&](int q) { return q < p ? q : q - 1; };
    int base = cur.n - 1;
    std::vector<Point> others_pts;
    for (int q : pen.others) others_pts.push_back(spos.at(q));
    std::vector<std::vector<int>> perms = permutations(cur);

    // The frame orientation at p is not determined by the sequence; build
    // every variant and keep the canonically least outcome, mirroring the
    // micro model.
    auto attempt = [&](const Point& a1, const Point& a2) -> AllowableSequence {
      std::vector<Sw> sws;
      Rat lam(1, 1 << 20);
      bool ok = false;
      for (int t = 0; t < 40 && !ok; ++t, lam /= 16) {
        std::array<Point, 4> corners = parallelogram_corners(center, a1, a2, lam);
        if (!replacement_generic(others_pts, corners, center)) continue;
        sws.clear();
        for (int m = 0; m < K; ++m) {
          const Interval& iv = cur.moves[m].intervals[0];
          std::vector<int> members;
          bool has_p = false;
          for (int q = iv.start; q < iv.start + iv.len; ++q) {
            if (perms[m][q] == p)
              has_p = true;
            else
              members.push_back(remap(perms[m][q]));
          }
          if (!has_p || members.size() >= 2) sws.push_back({slot[m], std::move(members)});
        }
        for (int q : pen.others)
          for (int ci = 0; ci < 4; ++ci)
            sws.push_back({pair_switch_dir(spos.at(q), corners[ci]), {remap(q), base + ci + 1}});
        for (int ci = 0; ci < 4; ++ci)
          for (int cj = ci + 1; cj < 4; ++cj)
            sws.push_back(
                {pair_switch_dir(corners[ci], corners[cj]), {base + ci + 1, base + cj + 1}});
        std::stable_sort(sws.begin(), sws.end(),
                         [&](const Sw& x, const Sw& y) { return switch_before(x.dir, y.dir); });
        ok = true;
        for (size_t i = 0; i + 1 < sws.size() && ok; ++i)
          if (det2(sws[i].dir, sws[i + 1].dir) == 0) ok = false;
        if (ok) {
          // New ids in sweep-start order of the corners.
          std::vector<int> corner_order = {0, 1, 2, 3};
          std::sort(corner_order.begin(), corner_order.end(), [&](int x, int y) {
            return corners[x].x < corners[y].x ||
                   (corners[x].x == corners[y].x && corners[x].y < corners[y].y);
          });
          std::vector<int> id_of(4);
          for (int rank = 0; rank < 4; ++rank) id_of[corner_order[rank]] = base + rank + 1;
          for (Sw& sw : sws)
            for (int& e : sw.members)
              if (e > base) e = id_of[e - base - 1];
        }
      }
      if (!ok) throw NotConstructible("replacement parallelogram never became generic");

      AllowableSequence next;
      next.n = cur.n + 3;
      for (int e : cur.first) {
        if (e == p)
          for (int c = 1; c <= 4; ++c) next.first.push_back(base + c);
        else
          next.first.push_back(remap(e));
      }
      std::vector<int> perm = next.first;
      std::vector<int> posn(next.n + 1);
      for (const Sw& sw : sws) {
        for (int t = 0; t < next.n; ++t) posn[perm[t]] = t;
        int mn = next.n, mx = -1;
        for (int e : sw.members) {
          mn = std::min(mn, posn[e]);
          mx = std::max(mx, posn[e]);
        }
        if (mx - mn + 1 != static_cast<int>(sw.members.size()))
          throw NotConstructible("replacement produced a non-contiguous switch");
        next.moves.push_back({{{mn, mx - mn + 1}}});
        std::reverse(perm.begin() + mn, perm.begin() + mx + 1);
      }
      ValidationReport nrep = validate(next);
      if (!nrep.generalized_ok)
        throw NotConstructible("replacement produced an invalid sequence: " +
                               (nrep.violations.empty() ? std::string("?") : nrep.violations[0]));
      return next;
    };

    bool have = false;
    AllowableSequence best;
    std::vector<int> best_code;
    for (int s1 : {1, -1})
      for (int s2 : {1, -1}) {
        Point a1{u1.x * s1, u1.y * s1};
        Point a2{u2.x * s2, u2.y * s2};
        try {
          AllowableSequence cand = attempt(a1, a2);
          std::vector<int> code = seq_code(canonical_form(cand));
          if (!have || code < best_code) {
            have = true;
            best = std::move(cand);
            best_code = std::move(code);
          }
        } catch (const NotConstructible&) {
          // variant failed to become generic; others may succeed
        }
      }
    if (!have) throw NotConstructible("no frame orientation produced a generic replacement");
    cur = std::move(best);
    // Maintain the construction order under the relabeling.
    ord.erase(ord.begin() + step);
    for (int& e : ord)
      if (e > p) --e;
  }
  ValidationReport finalrep = validate(cur);
  if (!finalrep.simple)
    throw NotConstructible("simplification left a non-simple move; base points collinear?");
  return cur;
}

std::vector<Point> micro_model_simplify(const std::vector<Point>& points,
                                        const std::vector<int>& order) {
  if (order.size() != points.size())
    throw NotConstructible("construction order must list every point");
  std::vector<Point> pts = points;
  std::vector<int> ord = order;

  for (int step = static_cast<int>(ord.size()) - 1; step >= 0; --step) {
    int p = ord[step];  // 1-based index into pts
    const Point center = pts[p - 1];
    // Collinear classes through p.
    std::vector<std::vector<int>> lines;
    std::vector<int> assigned(pts.size() + 1, -1);
    for (size_t q = 1; q <= pts.size(); ++q) {
      if (static_cast<int>(q) == p) continue;
      bool placed = false;
      for (size_t li = 0; li < lines.size() && !placed; ++li)
        if (orientation(center, pts[lines[li][0] - 1], pts[q - 1]) == Sign::Zero) {
          lines[li].push_back(static_cast<int>(q));
          placed = true;
        }
      if (!placed) lines.push_back({static_cast<int>(q)});
    }
    std::erase_if(lines, [](const std::vector<int>& l) { return l.size() < 2; });
    if (lines.size() > 2)
      throw NotConstructible("point " + std::to_string(p) + " lies on three spanned lines");
    if (lines.empty()) continue;

    Point u1 = line_dir(center, pts[lines[0][0] - 1]);
    Point u2;
    if (lines.size() == 2) {
      u2 = line_dir(center, pts[lines[1][0] - 1]);
    } else {
      std::vector<Point> pencil;
      for (size_t q = 1; q <= pts.size(); ++q)
        if (static_cast<int>(q) != p) pencil.push_back(line_dir(center, pts[q - 1]));
      u2 = phantom_axis(u1, pencil);
    }
    std::vector<Point> others;
    for (size_t q = 1; q <= pts.size(); ++q)
      if (static_cast<int>(q) != p) others.push_back(pts[q - 1]);

    // Same frame canonicalization as the sequence path: all four
    // orientations, canonically least extracted sequence wins.
    bool have = false;
    std::vector<Point> best_pts;
    std::vector<int> best_code;
    for (int s1 : {1, -1})
      for (int s2 : {1, -1}) {
        Point a1{u1.x * s1, u1.y * s1};
        Point a2{u2.x * s2, u2.y * s2};
        Rat lam(1, 1 << 20);
        std::array<Point, 4> corners{};
        bool ok = false;
        for (int t = 0; t < 40 && !ok; ++t, lam /= 16) {
          corners = parallelogram_corners(center, a1, a2, lam);
          ok = replacement_generic(others, corners, center);
        }
        if (!ok) continue;
        std::vector<Point> cand = others;
        cand.insert(cand.begin() + (p - 1), Point{});  // placeholder to keep 1-based slots
        cand.erase(cand.begin() + (p - 1));
        std::sort(corners.begin(), corners.end(), [](const Point& a, const Point& b) {
          return a.x < b.x || (a.x == b.x && a.y < b.y);
        });
        cand.insert(cand.end(), corners.begin(), corners.end());
        try {
          std::vector<int> code = seq_code(canonical_form(extract_from_points(cand)));
          if (!have || code < best_code) {
            have = true;
            best_pts = std::move(cand);
            best_code = std::move(code);
          }
        } catch (const Error&) {
        }
      }
    if (!have) throw NotConstructible("micro model parallelogram never became generic");
    pts = std::move(best_pts);
    ord.erase(ord.begin() + step);
    for (int& e : ord)
      if (e > p) --e;
  }
  return pts;
}

}  // namespace seqgeom
