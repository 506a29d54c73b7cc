#include "seqgeom/convexgeom.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <set>

#include "seqgeom/errors.hpp"

namespace seqgeom {

namespace {
constexpr int kMaxExplicitGround = 20;
}

ConvexGeometry::ConvexGeometry(std::vector<std::string> ground, std::vector<uint32_t> family_masks)
    : ground_(std::move(ground)), family_(std::move(family_masks)) {
  if (ground_.size() > 31) throw TooLarge("ground set too large");
  uint32_t full = (ground_.size() == 31) ? 0x7fffffffu : ((1u << ground_.size()) - 1);
  for (uint32_t m : family_)
    if (m & ~full) throw InvariantViolation("family mask outside ground set");
  std::sort(family_.begin(), family_.end());
  family_.erase(std::unique(family_.begin(), family_.end()), family_.end());
}

bool ConvexGeometry::contains(uint32_t mask) const {
  return std::binary_search(family_.begin(), family_.end(), mask);
}

std::vector<std::string> ConvexGeometry::labels_of(uint32_t mask) const {
  std::vector<std::string> out;
  for (size_t i = 0; i < ground_.size(); ++i)
    if (mask & (1u << i)) out.push_back(ground_[i]);
  return out;
}

uint32_t ConvexGeometry::mask_of(const std::vector<std::string>& labels) const {
  uint32_t m = 0;
  for (const auto& l : labels) {
    auto it = std::find(ground_.begin(), ground_.end(), l);
    if (it == ground_.end()) throw Error("unknown label: " + l);
    m |= 1u << (it - ground_.begin());
  }
  return m;
}

namespace {

// Sign and betweenness tables over point indices, for fast subset scans.
struct PointTables {
  int n;
  std::vector<int8_t> sgn;    // n^3
  std::vector<uint8_t> betw;  // betw[a][b][d]: d on closed segment [a,b]
  std::vector<int> sorted;    // indices in lexicographic point order

  explicit PointTables(const std::vector<Point>& pts) : n(static_cast<int>(pts.size())) {
    sgn.assign(static_cast<size_t>(n) * n * n, 0);
    betw.assign(static_cast<size_t>(n) * n * n, 0);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
          sgn[(static_cast<size_t>(a) * n + b) * n + c] =
              static_cast<int8_t>(to_int(orientation(pts[a], pts[b], pts[c])));
          betw[(static_cast<size_t>(a) * n + b) * n + c] =
              on_segment(pts[c], pts[a], pts[b]) ? 1 : 0;
        }
    sorted.resize(n);
    for (int i = 0; i < n; ++i) sorted[i] = i;
    std::sort(sorted.begin(), sorted.end(), [&](int a, int b) {
      return pts[a].x < pts[b].x || (pts[a].x == pts[b].x && pts[a].y < pts[b].y);
    });
  }

  int s(int a, int b, int c) const { return sgn[(static_cast<size_t>(a) * n + b) * n + c]; }

  // Hull of the subset, counterclockwise, strict corners only.
  std::vector<int> hull(uint32_t mask) const {
    std::vector<int> pts;
    for (int i : sorted)
      if (mask & (1u << i)) pts.push_back(i);
    size_t m = pts.size();
    if (m <= 1) return pts;
    std::vector<int> h(2 * m);
    size_t k = 0;
    for (size_t i = 0; i < m; ++i) {
      while (k >= 2 && s(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
      h[k++] = pts[i];
    }
    for (size_t i = m - 1, t = k + 1; i-- > 0;) {
      while (k >= t && s(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
      h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
  }

  bool in_subset_hull(int d, const std::vector<int>& h) const {
    if (h.empty()) return false;
    if (h.size() == 1) return d == h[0];
    if (h.size() == 2)
      return s(h[0], h[1], d) == 0 && betw[(static_cast<size_t>(h[0]) * n + h[1]) * n + d];
    for (size_t i = 0; i < h.size(); ++i)
      if (s(h[i], h[(i + 1) % h.size()], d) < 0) return false;
    return true;
  }
};

}  // namespace

ConvexGeometry geometry_from_points(const std::vector<std::string>& labels,
                                    const std::vector<Point>& points) {
  int n = static_cast<int>(points.size());
  if (labels.size() != points.size()) throw InvariantViolation("labels/points size mismatch");
  if (n > kMaxExplicitGround)
    throw TooLarge("explicit family limited to 20 points, got " + std::to_string(n));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (points[i] == points[j]) throw DuplicatePoint("coincident points");

  PointTables t(points);
  std::vector<uint32_t> family;
  uint32_t full = (1u << n) - 1;
  for (uint32_t mask = 0; mask <= full; ++mask) {
    std::vector<int> h = t.hull(mask);
    bool closed = true;
    for (int d = 0; d < n && closed; ++d)
      if (!(mask & (1u << d)) && t.in_subset_hull(d, h)) closed = false;
    if (closed) family.push_back(mask);
  }
  return ConvexGeometry(labels, std::move(family));
}

ConvexGeometry geometry_from_chirotope(const Chirotope& c) {
  int n = c.size();
  if (n > kMaxExplicitGround) throw TooLarge("explicit family limited to 20 elements");

  // between(a, d, b): d collinear with a,b and between them, decided through a
  // witness off the line.
  auto between = [&](int a, int d, int b) {
    if (c.orient(a, b, d) != Sign::Zero) return false;
    for (int w = 0; w < n; ++w) {
      Sign s1 = c.orient(a, d, w);
      if (s1 == Sign::Zero) continue;
      if (s1 == c.orient(d, b, w)) return true;
      return false;  // any one witness decides
    }
    return false;  // no witness off the line: betweenness not derivable
  };

  // Per-element trigger masks: d joins the closure of S iff a trigger fits S.
  std::vector<std::vector<uint32_t>> triggers(n);
  for (int d = 0; d < n; ++d) {
    for (int a = 0; a < n; ++a) {
      if (a == d) continue;
      for (int b = a + 1; b < n; ++b) {
        if (b == d) continue;
        if (between(a, d, b)) triggers[d].push_back((1u << a) | (1u << b));
        for (int e = b + 1; e < n; ++e) {
          if (e == d) continue;
          if (c.orient(a, b, e) != Sign::Zero && c.in_triangle(a, b, e, d))
            triggers[d].push_back((1u << a) | (1u << b) | (1u << e));
        }
      }
    }
  }

  std::vector<uint32_t> family;
  uint32_t full = (1u << n) - 1;
  for (uint32_t mask = 0; mask <= full; ++mask) {
    bool closed = true;
    for (int d = 0; d < n && closed; ++d) {
      if (mask & (1u << d)) continue;
      for (uint32_t trig : triggers[d])
        if ((trig & mask) == trig) {
          closed = false;
          break;
        }
    }
    if (closed) family.push_back(mask);
  }
  return ConvexGeometry(c.ground(), std::move(family));
}

CgAxiomReport check_cg_axioms(const ConvexGeometry& g) {
  CgAxiomReport rep;
  int n = g.size();
  if (n > kMaxExplicitGround) throw TooLarge("axiom check limited to 20 elements");
  uint32_t full = (1u << n) - 1;
  size_t total = static_cast<size_t>(full) + 1;
  std::vector<uint8_t> in_f(total, 0);
  for (uint32_t m : g.family()) in_f[m] = 1;

  auto note = [&](int axiom, uint32_t subject, uint32_t witness) {
    rep.total_violations++;
    if (rep.sample.size() < 16) rep.sample.push_back({axiom, subject, witness});
  };

  if (!in_f[0]) note(1, 0, 0);
  if (!in_f[full]) note(1, full, 0);

  // Axiom 2 over every subset: the intersection of all family members
  // containing S must itself be a member. I(S) below is that intersection,
  // computed by a superset recurrence; sentinel ~0u marks "no member above".
  constexpr uint32_t kNone = ~0u;
  std::vector<uint32_t> inter(total);
  std::vector<uint32_t> order(total);
  for (uint32_t m = 0; m < total; ++m) order[m] = m;
  std::sort(order.begin(), order.end(), [](uint32_t a, uint32_t b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa > pb || (pa == pb && a < b);
  });
  std::set<uint32_t> reported;
  for (uint32_t mask : order) {
    if (in_f[mask]) {
      inter[mask] = mask;
      continue;
    }
    uint32_t acc = kNone;
    for (int x = 0; x < n; ++x) {
      if (mask & (1u << x)) continue;
      uint32_t up = inter[mask | (1u << x)];
      if (up != kNone) acc &= up;
    }
    inter[mask] = acc;
    if (acc != kNone && !in_f[acc] && reported.insert(acc).second) note(2, acc, mask);
  }

  for (uint32_t m : g.family()) {
    if (m == full) continue;
    bool extendable = false;
    for (int x = 0; x < n && !extendable; ++x)
      if (!(m & (1u << x)) && in_f[m | (1u << x)]) extendable = true;
    if (!extendable) note(3, m, 0);
  }
  return rep;
}

namespace {

Rat approx_rat(double v, long den) {
  return make_rat(static_cast<long>(std::llround(v * static_cast<double>(den))), den);
}

}  // namespace

DoubleRing double_ring(int k) {
  if (k < 3) throw InvariantViolation("double_ring requires k >= 3");
  if (4 * k > kMaxExplicitGround + 12)  // hard cap keeps verification cheap
    throw TooLarge("double_ring limited to k <= 8");

  const Rat r_out(1024);
  Rat gap(1, 64 * k * k);
  for (int attempt = 0; attempt < 20; ++attempt) {
    Rat r_in = r_out * (1 - gap);
    // k rational unit directions in the open upper half plane.
    std::vector<Point> dirs;
    for (int i = 1; i <= k; ++i) {
      double phi = M_PI * (2.0 * i - 1.0) / (2.0 * k);
      Rat t = approx_rat(std::tan(phi / 2.0), 4096 + 17 * attempt);
      Rat den = 1 + t * t;
      dirs.push_back({(1 - t * t) / den, 2 * t / den});
    }
    std::vector<Point> pts(4 * k);
    std::vector<std::string> labels(4 * k);
    for (int i = 0; i < k; ++i) {
      pts[i] = {r_out * dirs[i].x, r_out * dirs[i].y};
      pts[i + k] = {-r_out * dirs[i].x, -r_out * dirs[i].y};
      pts[2 * k + i] = {r_in * dirs[i].x, r_in * dirs[i].y};
      pts[3 * k + i] = {-r_in * dirs[i].x, -r_in * dirs[i].y};
    }
    for (int i = 0; i < 2 * k; ++i) {
      labels[i] = "r" + std::to_string(i + 1);
      labels[2 * k + i] = "rp" + std::to_string(i + 1);
    }

    auto line_class = [&](int idx) { return idx < 2 * k ? idx % k : (idx - 2 * k) % k; };
    bool ok = true;
    for (int a = 0; a < 4 * k && ok; ++a)
      for (int b = a + 1; b < 4 * k && ok; ++b)
        for (int c = a == 0 ? b + 1 : b + 1; c < 4 * k && ok; ++c) {
          bool designed = line_class(a) == line_class(b) && line_class(b) == line_class(c);
          bool zero = orientation(pts[a], pts[b], pts[c]) == Sign::Zero;
          if (zero != designed) ok = false;
        }
    if (ok) {
      // Hull must be exactly r_1..r_2k counterclockwise.
      std::vector<Point> hull = convex_hull(pts);
      ok = hull.size() == static_cast<size_t>(2 * k);
      if (ok) {
        std::vector<Point> outer(pts.begin(), pts.begin() + 2 * k);
        int start = -1;
        for (int i = 0; i < 2 * k && start < 0; ++i)
          if (hull[0] == outer[i]) start = i;
        ok = start >= 0;
        for (int i = 0; ok && i < 2 * k; ++i) ok = hull[i] == outer[(start + i) % (2 * k)];
      }
    }
    if (ok) {
      // Dropping r_i exposes r'_i on the hull.
      for (int i = 0; i < 2 * k && ok; ++i) {
        std::vector<Point> rest;
        for (int j = 0; j < 4 * k; ++j)
          if (j != i) rest.push_back(pts[j]);
        std::vector<Point> hull = convex_hull(rest);
        ok = std::find(hull.begin(), hull.end(), pts[2 * k + i]) != hull.end();
      }
    }
    if (ok) {
      DoubleRing ring;
      ring.k = k;
      ring.labels = std::move(labels);
      ring.points = std::move(pts);
      ring.r_out = r_out;
      ring.r_in = r_in;
      return ring;
    }
    gap /= 2;
  }
  throw ConstructionFailure("double_ring: no valid configuration after retries");
}

std::vector<std::vector<std::string>> maximal_convex_missing_pair(const ConvexGeometry& g, int i) {
  uint32_t want = g.mask_of({"r" + std::to_string(i)});
  uint32_t avoid = g.mask_of({"rp" + std::to_string(i)});
  std::vector<uint32_t> filtered;
  for (uint32_t m : g.family())
    if ((m & want) && !(m & avoid)) filtered.push_back(m);
  std::sort(filtered.begin(), filtered.end(), [](uint32_t a, uint32_t b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa > pb || (pa == pb && a < b);
  });
  std::vector<uint32_t> maximal;
  for (uint32_t m : filtered) {
    bool dominated = false;
    for (uint32_t mx : maximal)
      if ((m & mx) == m && m != mx) {
        dominated = true;
        break;
      }
    if (!dominated) maximal.push_back(m);
  }
  std::vector<std::vector<std::string>> out;
  out.reserve(maximal.size());
  for (uint32_t m : maximal) out.push_back(g.labels_of(m));
  return out;
}

namespace {

// Sign conventions for the mixed triples of O_A, pinned against the ring
// realization oracle. The ring label r_h sits at the far end of the h-th
// switch line in direction (d_y, -d_x), where d is the switch direction of
// the sweep; with the ascending-projection convention of extract_from_points
// this realizes rule (p,p,r) as stated and flips the (r_h, r_{h+k}, p) rule.
constexpr int kRulePPR = -1;  // chi(p_x, p_y, r_j) when x before y in pi_j
constexpr int kRuleDiameter = +1;  // chi(r_h, r_{h+k}, p) when p precedes the substring

struct ReduceContext {
  int n, k;
  std::vector<std::vector<int>> perms;        // pi_1.. (before each move)
  std::vector<std::vector<int>> pos;          // pos[j][element]
  std::vector<Interval> intervals;            // one per move
  std::vector<std::vector<uint8_t>> member;   // member[j][element]
  const Chirotope* induced;
  const Chirotope* ring_chi;

  // chi of an ordered triple of ground positions (p's, then r's, then rp's).
  int sgn(int a, int b, int c) const {
    int kind_a = kind(a), kind_b = kind(b), kind_c = kind(c);
    int np = (kind_a == 0) + (kind_b == 0) + (kind_c == 0);
    if (np == 3) return to_int(induced->orient(a, b, c));
    if (np == 0) return to_int(ring_chi->orient(a - n, b - n, c - n));
    // Substitute primed ring labels, preserving order and orientation.
    int v[3] = {a, b, c};
    for (int t = 0; t < 3; ++t) {
      if (kind(v[t]) != 2) continue;
      int h = ring_index(v[t]);
      bool partner_present = false;
      for (int u = 0; u < 3; ++u)
        if (u != t && kind(v[u]) == 1 && ring_index(v[u]) == h) partner_present = true;
      int target = partner_present ? (h + k - 1) % (2 * k) + 1 : h;
      v[t] = n + target - 1;
      t = -1;  // restart: substitutions may interact
    }
    if (v[0] == v[1] || v[1] == v[2] || v[0] == v[2]) return 0;
    // Bubble p's before ring labels, tracking the alternation parity.
    int parity = 1;
    int idx[3] = {v[0], v[1], v[2]};
    for (int pass = 0; pass < 3; ++pass)
      for (int t = 0; t + 1 < 3; ++t)
        if (kind(idx[t]) > kind(idx[t + 1])) {
          std::swap(idx[t], idx[t + 1]);
          parity = -parity;
        }
    int np2 = (kind(idx[0]) == 0) + (kind(idx[1]) == 0) + (kind(idx[2]) == 0);
    if (np2 == 2) return parity * rule_ppr(idx[0], idx[1], ring_index(idx[2]));
    return parity * rule_rrp(ring_index(idx[1]), ring_index(idx[2]), idx[0]);
  }

  int kind(int g) const { return g < n ? 0 : (g < n + 2 * k ? 1 : 2); }
  int ring_index(int g) const { return g < n + 2 * k ? g - n + 1 : g - n - 2 * k + 1; }

  // chi(p_x, p_y, r_j) with x, y ground positions < n, j in 1..2k.
  int rule_ppr(int x, int y, int j) const {
    int flip = 1;
    if (j > k) {
      j -= k;
      flip = -1;
    }
    int ex = x + 1, ey = y + 1;
    if (member[j - 1][ex] && member[j - 1][ey]) return 0;
    int before = pos[j - 1][ex] < pos[j - 1][ey] ? 1 : -1;
    return flip * before * kRulePPR;
  }

  // chi(r_g, r_h, p) with p a ground position < n. Order (idx1, idx2) = (g, h).
  int rule_rrp(int g, int h, int p) const {
    int delta = ((h - g) % (2 * k) + 2 * k) % (2 * k);
    if (delta != k) return delta < k ? 1 : -1;
    int m = g, parity = 1;
    if (m > k) {
      m = h;
      parity = -1;
    }
    int e = p + 1;
    if (member[m - 1][e]) return 0;
    const Interval& iv = intervals[m - 1];
    int precedes = pos[m - 1][e] < iv.start ? 1 : -1;
    return parity * precedes * kRuleDiameter;
  }
};

}  // namespace

Chirotope reduce_to_order_type(const AllowableSequence& a) {
  ValidationReport rep = validate(a);
  if (!rep.generalized_ok) throw InvalidSequence("reduce_to_order_type: invalid sequence");
  if (a.n < 3) throw InvalidSequence("reduce_to_order_type needs n >= 3");
  for (const Move& m : a.moves)
    if (m.intervals.size() != 1)
      throw InvalidSequence(
          "reduce_to_order_type: moves with parallel switches are not supported; the ring lines "
          "cannot carry two parallel substrings");
  int n = a.n;
  int k = static_cast<int>(a.moves.size());
  if (k < 3) throw InvalidSequence("reduce_to_order_type needs at least 3 moves");

  ReduceContext ctx;
  ctx.n = n;
  ctx.k = k;
  ctx.perms = permutations(a);
  ctx.perms.pop_back();
  for (const auto& perm : ctx.perms) {
    std::vector<int> p(n + 1, -1);
    for (int i = 0; i < n; ++i) p[perm[i]] = i;
    ctx.pos.push_back(std::move(p));
  }
  for (int j = 0; j < k; ++j) {
    const Interval& iv = a.moves[j].intervals[0];
    ctx.intervals.push_back(iv);
    std::vector<uint8_t> mem(n + 1, 0);
    for (int p = iv.start; p < iv.start + iv.len; ++p) mem[ctx.perms[j][p]] = 1;
    ctx.member.push_back(std::move(mem));
  }
  Chirotope induced = induced_chirotope(a);
  DoubleRing ring = double_ring(k);
  Chirotope ring_chi = Chirotope::from_points(ring.labels, ring.points);
  ctx.induced = &induced;
  ctx.ring_chi = &ring_chi;

  std::vector<std::string> ground;
  for (int i = 1; i <= n; ++i) ground.push_back("p" + std::to_string(i));
  for (const auto& l : ring.labels) ground.push_back(l);
  int total = n + 4 * k;
  std::vector<int8_t> table;
  table.reserve(Chirotope::triple_count(total));
  for (int i = 0; i < total; ++i)
    for (int j = i + 1; j < total; ++j)
      for (int l = j + 1; l < total; ++l) table.push_back(static_cast<int8_t>(ctx.sgn(i, j, l)));
  return Chirotope(ground, std::move(table));
}

RingRealization ring_realization(const std::vector<Point>& points) {
  AllowableSequence a = extract_from_points(points);
  int n = a.n, k = static_cast<int>(a.moves.size());
  if (n < 3 || k < 3) throw InvalidSequence("ring_realization needs n >= 3 with >= 3 moves");
  for (const Move& m : a.moves)
    if (m.intervals.size() != 1)
      throw InvalidSequence("ring_realization: parallel switches unsupported");
  Chirotope target = reduce_to_order_type(a);

  std::vector<SwitchRecord> sw = switches(a);
  Rat scale(0);
  for (const Point& p : points) {
    Rat ax = abs(p.x), ay = abs(p.y);
    if (ax > scale) scale = ax;
    if (ay > scale) scale = ay;
  }
  Rat t_param = (scale + 1) * 8;
  Rat lam(1, 1024);
  for (int attempt = 0; attempt < 20; ++attempt) {
    std::vector<std::string> labels;
    std::vector<Point> pts;
    for (int i = 1; i <= n; ++i) {
      labels.push_back("p" + std::to_string(i));
      pts.push_back(points[i - 1]);
    }
    pts.resize(n + 4 * k);
    labels.resize(n + 4 * k);
    for (int j = 0; j < k; ++j) {
      const Point& px = points[sw[j].members[0] - 1];
      const Point& py = points[sw[j].members[1] - 1];
      // Switch direction d normalized to angle (0,180]; r_j sits toward
      // (d_y, -d_x) so that the mixed-triple rules of O_A hold.
      Rat dx = -(py.y - px.y), dy = py.x - px.x;
      if (dy < 0 || (dy == 0 && dx > 0)) {
        dx = -dx;
        dy = -dy;
      }
      Rat ex = dy, ey = -dx;
      // Near-unit scaling keeps the ring points in convex position; they
      // stay exactly on the spanned line either way.
      double norm = std::sqrt(Rat(ex * ex + ey * ey).get_d());
      Rat inv_norm = make_rat(static_cast<long>(std::llround((1u << 30) / norm)), 1u << 30);
      ex *= inv_norm;
      ey *= inv_norm;
      const Point& c = px;
      pts[n + j] = {c.x + t_param * ex, c.y + t_param * ey};
      pts[n + k + j] = {c.x - t_param * ex, c.y - t_param * ey};
      pts[n + 2 * k + j] = {c.x + t_param * (1 - lam) * ex, c.y + t_param * (1 - lam) * ey};
      pts[n + 3 * k + j] = {c.x - t_param * (1 - lam) * ex, c.y - t_param * (1 - lam) * ey};
      labels[n + j] = "r" + std::to_string(j + 1);
      labels[n + k + j] = "r" + std::to_string(k + j + 1);
      labels[n + 2 * k + j] = "rp" + std::to_string(j + 1);
      labels[n + 3 * k + j] = "rp" + std::to_string(k + j + 1);
    }
    bool distinct = true;
    for (size_t i = 0; i < pts.size() && distinct; ++i)
      for (size_t j = i + 1; j < pts.size() && distinct; ++j)
        if (pts[i] == pts[j]) distinct = false;
    if (distinct) {
      Chirotope got = Chirotope::from_points(labels, pts);
      // Ground orders differ (labels here are p.., r1..r2k interleaved by
      // construction); rebuild in target order before comparing.
      std::vector<Point> ordered(pts.size());
      bool all_found = true;
      for (size_t gi = 0; gi < target.ground().size(); ++gi) {
        auto it = std::find(labels.begin(), labels.end(), target.ground()[gi]);
        if (it == labels.end()) {
          all_found = false;
          break;
        }
        ordered[gi] = pts[it - labels.begin()];
      }
      if (all_found) {
        Chirotope got_ordered = Chirotope::from_points(target.ground(), ordered);
        if (got_ordered == target) return {target.ground(), ordered};
      }
    }
    t_param *= 8;
    lam /= 4;
  }
  throw ConstructionFailure("ring_realization: adaptation failed");
}

}  // namespace seqgeom
