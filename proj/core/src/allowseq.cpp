#include "seqgeom/allowseq.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "seqgeom/errors.hpp"
#include "seqgeom/ordfield.hpp"
#include "seqgeom/sweep.hpp"

namespace seqgeom {

namespace {

void apply_move(std::vector<int>& perm, const Move& m) {
  for (const Interval& iv : m.intervals)
    std::reverse(perm.begin() + iv.start, perm.begin() + iv.start + iv.len);
}

}  // namespace

ValidationReport validate(const AllowableSequence& a) {
  ValidationReport rep;
  auto fail = [&](std::string msg) { rep.violations.push_back(std::move(msg)); };

  if (a.n < 1) fail("n must be positive");
  if (static_cast<int>(a.first.size()) != a.n) fail("first has wrong length");
  {
    std::vector<bool> seen(a.n + 1, false);
    for (int e : a.first) {
      if (e < 1 || e > a.n || seen[e]) {
        fail("first is not a permutation of 1..n");
        break;
      }
      seen[e] = true;
    }
  }
  if (!rep.violations.empty()) return rep;

  std::vector<int> perm = a.first;
  // pair_reversals[{x,y}] with x<y
  std::vector<int> pair_reversals(static_cast<size_t>(a.n) * a.n, 0);
  bool structure_ok = true;
  bool all_simple = true;
  for (size_t mi = 0; mi < a.moves.size(); ++mi) {
    const Move& m = a.moves[mi];
    if (m.intervals.empty()) {
      fail("move " + std::to_string(mi) + " has no intervals");
      structure_ok = false;
      continue;
    }
    if (m.intervals.size() != 1 || m.intervals[0].len != 2) all_simple = false;
    int prev_end = -1;
    for (const Interval& iv : m.intervals) {
      if (iv.len < 2) {
        fail("move " + std::to_string(mi) + ": interval length < 2");
        structure_ok = false;
      }
      if (iv.start < prev_end) {
        fail("move " + std::to_string(mi) + ": intervals unsorted or overlapping");
        structure_ok = false;
      }
      if (iv.start < 0 || iv.start + iv.len > a.n) {
        fail("move " + std::to_string(mi) + ": interval out of bounds");
        structure_ok = false;
      }
      prev_end = iv.start + iv.len;
    }
    if (!structure_ok) continue;
    for (const Interval& iv : m.intervals) {
      for (int u = iv.start; u < iv.start + iv.len; ++u)
        for (int v = u + 1; v < iv.start + iv.len; ++v) {
          int x = perm[u], y = perm[v];
          if (x > y) std::swap(x, y);
          pair_reversals[static_cast<size_t>(x - 1) * a.n + (y - 1)]++;
        }
    }
    apply_move(perm, m);
  }
  if (structure_ok) {
    for (int x = 1; x <= a.n; ++x)
      for (int y = x + 1; y <= a.n; ++y) {
        int c = pair_reversals[static_cast<size_t>(x - 1) * a.n + (y - 1)];
        if (c == 0)
          fail("pair {" + std::to_string(x) + "," + std::to_string(y) + "} never reversed");
        else if (c > 1)
          fail("pair {" + std::to_string(x) + "," + std::to_string(y) + "} reversed twice");
      }
    std::vector<int> rev(a.first.rbegin(), a.first.rend());
    if (perm != rev) fail("final permutation is not the reverse of the first");
  }
  rep.generalized_ok = rep.violations.empty();
  rep.simple = rep.generalized_ok && all_simple;
  return rep;
}

AllowableSequence extract_from_points(const std::vector<Point>& points) {
  std::vector<SweepPoint<Rat>> pts;
  pts.reserve(points.size());
  for (const Point& p : points) pts.push_back({p.x, p.y});
  return extract_sweep(pts);
}

Chirotope induced_chirotope(const AllowableSequence& a) {
  ValidationReport rep = validate(a);
  if (!rep.generalized_ok)
    throw InvalidSequence("induced_chirotope: " +
                          (rep.violations.empty() ? std::string("invalid") : rep.violations[0]));
  int n = a.n;
  if (n < 3) throw InvalidSequence("induced_chirotope needs n >= 3");

  std::vector<int8_t> table(Chirotope::triple_count(n), 127);
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = std::to_string(i + 1);
  Chirotope probe(labels, std::vector<int8_t>(Chirotope::triple_count(n), 0));  // index math only

  auto set_triple = [&](int x, int y, int z, int sgn) {
    // chi(x,y,z) = sgn with x,y,z ground positions; store sorted with parity.
    int i = x, j = y, k = z, parity = 1;
    if (i > j) { std::swap(i, j); parity = -parity; }
    if (j > k) { std::swap(j, k); parity = -parity; }
    if (i > j) { std::swap(i, j); parity = -parity; }
    int8_t v = static_cast<int8_t>(parity * sgn);
    int8_t& slot = table[probe.triple_index(i, j, k)];
    if (slot != 127 && slot != v)
      throw InvalidSequence("sequence does not determine a consistent order type");
    slot = v;
  };

  std::vector<int> perm = a.first;
  std::vector<int> pos(n + 1);
  for (const Move& m : a.moves) {
    for (int p = 0; p < n; ++p) pos[perm[p]] = p;
    for (const Interval& iv : m.intervals) {
      int s = iv.start, e = iv.start + iv.len;
      for (int u = s; u < e; ++u)
        for (int v = u + 1; v < e; ++v) {
          int x = perm[u] - 1, y = perm[v] - 1;  // x before y here
          for (int z = 1; z <= a.n; ++z) {
            if (z - 1 == x || z - 1 == y) continue;
            if (pos[z] >= s && pos[z] < e)
              set_triple(x, y, z - 1, 0);
            else
              set_triple(x, y, z - 1, pos[z] > e - 1 ? 1 : -1);
          }
        }
    }
    apply_move(perm, m);
  }
  for (int8_t v : table)
    if (v == 127) throw InvalidSequence("sequence leaves a triple undetermined");
  return Chirotope(labels, std::move(table));
}

std::vector<std::vector<int>> permutations(const AllowableSequence& a) {
  std::vector<std::vector<int>> out;
  out.reserve(a.moves.size() + 1);
  std::vector<int> perm = a.first;
  out.push_back(perm);
  for (const Move& m : a.moves) {
    apply_move(perm, m);
    out.push_back(perm);
  }
  return out;
}

std::vector<SwitchRecord> switches(const AllowableSequence& a) {
  std::vector<SwitchRecord> out;
  std::vector<int> perm = a.first;
  for (size_t mi = 0; mi < a.moves.size(); ++mi) {
    for (const Interval& iv : a.moves[mi].intervals) {
      SwitchRecord rec;
      rec.move_index = static_cast<int>(mi);
      rec.members.assign(perm.begin() + iv.start, perm.begin() + iv.start + iv.len);
      std::sort(rec.members.begin(), rec.members.end());
      out.push_back(std::move(rec));
    }
    apply_move(perm, a.moves[mi]);
  }
  return out;
}

namespace {

AllowableSequence reflect(const AllowableSequence& a) {
  AllowableSequence r;
  r.n = a.n;
  r.first.assign(a.first.rbegin(), a.first.rend());
  r.moves.assign(a.moves.rbegin(), a.moves.rend());
  return r;
}

AllowableSequence shift_once(const AllowableSequence& a) {
  // Start the sweep just after the first move: the wrapped move acts on
  // mirrored positions of the reversed permutation.
  AllowableSequence s;
  s.n = a.n;
  s.first = a.first;
  apply_move(s.first, a.moves[0]);
  s.moves.assign(a.moves.begin() + 1, a.moves.end());
  Move wrapped;
  for (const Interval& iv : a.moves[0].intervals)
    wrapped.intervals.push_back({a.n - iv.start - iv.len, iv.len});
  std::sort(wrapped.intervals.begin(), wrapped.intervals.end(),
            [](const Interval& x, const Interval& y) { return x.start < y.start; });
  s.moves.push_back(std::move(wrapped));
  return s;
}

std::vector<int> encode(const AllowableSequence& a) {
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

}  // namespace

AllowableSequence canonical_form(const AllowableSequence& a) {
  ValidationReport rep = validate(a);
  if (!rep.generalized_ok)
    throw InvalidSequence("canonical_form: " +
                          (rep.violations.empty() ? std::string("invalid") : rep.violations[0]));
  AllowableSequence best = a;
  std::vector<int> best_code = encode(a);
  // The circular structure repeats after 2k moves: each spanned line fires
  // once per half turn, with mirrored intervals on the second pass.
  auto consider_orbit = [&](AllowableSequence cur) {
    size_t period = std::max<size_t>(2 * cur.moves.size(), 1);
    for (size_t c = 0; c < period; ++c) {
      std::vector<int> code = encode(cur);
      if (code < best_code) {
        best_code = std::move(code);
        best = cur;
      }
      if (!cur.moves.empty()) cur = shift_once(cur);
    }
  };
  consider_orbit(a);
  consider_orbit(reflect(a));
  return best;
}

}  // namespace seqgeom
