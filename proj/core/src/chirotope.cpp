#include "seqgeom/chirotope.hpp"

#include <algorithm>

#include "seqgeom/errors.hpp"

namespace seqgeom {

Chirotope::Chirotope(std::vector<std::string> ground, std::vector<int8_t> sorted_triples)
    : n_(static_cast<int>(ground.size())),
      ground_(std::move(ground)),
      table_(std::move(sorted_triples)) {
  if (n_ < 3) throw InvariantViolation("chirotope needs at least 3 elements");
  if (table_.size() != triple_count(n_))
    throw InvariantViolation("chirotope table size mismatch");
  for (int8_t v : table_)
    if (v < -1 || v > 1) throw InvariantViolation("chirotope entries must be in {-1,0,1}");
}

Chirotope Chirotope::from_points(const std::vector<std::string>& labels,
                                 const std::vector<Point>& pts) {
  if (labels.size() != pts.size())
    throw InvariantViolation("labels/points size mismatch");
  int n = static_cast<int>(pts.size());
  if (n < 3) throw InvariantViolation("need at least 3 points");
  std::vector<int8_t> table;
  table.reserve(triple_count(n));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        table.push_back(static_cast<int8_t>(to_int(orientation(pts[i], pts[j], pts[k]))));
  return Chirotope(labels, std::move(table));
}

int Chirotope::index_of(const std::string& label) const {
  auto it = std::find(ground_.begin(), ground_.end(), label);
  if (it == ground_.end()) throw Error("unknown ground label: " + label);
  return static_cast<int>(it - ground_.begin());
}

size_t Chirotope::triple_index(int i, int j, int k) const {
  // Lexicographic rank of (i,j,k), i<j<k, over n_ elements.
  auto c2 = [](long v) { return v * (v - 1) / 2; };
  auto c3 = [](long v) { return v * (v - 1) * (v - 2) / 6; };
  long n = n_;
  return static_cast<size_t>(c3(n) - c3(n - i) + c2(n - 1 - i) - c2(n - j) + (k - j - 1));
}

Sign Chirotope::orient(int a, int b, int c) const {
  if (a == b || b == c || a == c) return Sign::Zero;
  int i = a, j = b, k = c;
  int parity = 1;
  if (i > j) { std::swap(i, j); parity = -parity; }
  if (j > k) { std::swap(j, k); parity = -parity; }
  if (i > j) { std::swap(i, j); parity = -parity; }
  int v = table_[triple_index(i, j, k)];
  return sign_from_int(parity * v);
}

bool Chirotope::is_simple() const {
  return std::none_of(table_.begin(), table_.end(), [](int8_t v) { return v == 0; });
}

AxiomReport Chirotope::check_axioms(size_t sample_cap) const {
  AxiomReport rep;
  bool all_zero = std::all_of(table_.begin(), table_.end(), [](int8_t v) { return v == 0; });
  if (all_zero) {
    rep.identically_zero = true;
    rep.total_violations++;
    rep.sample.push_back({1, {-1, -1, -1, -1, -1, -1}});
  }
  // Axiom 3, the rank-3 exchange condition, over all 6-tuples. Axiom 2
  // (alternation) holds by representation.
  for (int p1 = 0; p1 < n_; ++p1)
    for (int p2 = 0; p2 < n_; ++p2)
      for (int p3 = 0; p3 < n_; ++p3) {
        int chi_p = to_int(orient(p1, p2, p3));
        for (int q1 = 0; q1 < n_; ++q1)
          for (int q2 = 0; q2 < n_; ++q2)
            for (int q3 = 0; q3 < n_; ++q3) {
              if (to_int(orient(q1, p2, p3)) * to_int(orient(p1, q2, q3)) < 0) continue;
              if (to_int(orient(q2, p2, p3)) * to_int(orient(q1, p1, q3)) < 0) continue;
              if (to_int(orient(q3, p2, p3)) * to_int(orient(q1, q2, p1)) < 0) continue;
              if (chi_p * to_int(orient(q1, q2, q3)) >= 0) continue;
              rep.total_violations++;
              if (rep.sample.size() < sample_cap)
                rep.sample.push_back({3, {p1, p2, p3, q1, q2, q3}});
            }
      }
  return rep;
}

bool Chirotope::in_triangle(int a, int b, int c, int d) const {
  Sign ref = orient(a, b, c);
  Sign s1 = orient(a, b, d);
  Sign s2 = orient(b, c, d);
  Sign s3 = orient(c, a, d);
  auto fits = [&](Sign s) { return s == ref || s == Sign::Zero; };
  return fits(s1) && fits(s2) && fits(s3);
}

std::set<int> Chirotope::closure(const std::set<int>& s) const {
  if (!is_simple()) throw NotSimple("closure requires a simple chirotope");
  std::set<int> cur = s;
  bool grew = true;
  while (grew) {  // one pass suffices for simple chirotopes; fixpoint for safety
    grew = false;
    std::vector<int> members(cur.begin(), cur.end());
    for (int d = 0; d < n_; ++d) {
      if (cur.count(d)) continue;
      bool inside = false;
      for (size_t x = 0; x < members.size() && !inside; ++x)
        for (size_t y = x + 1; y < members.size() && !inside; ++y)
          for (size_t z = y + 1; z < members.size() && !inside; ++z)
            inside = in_triangle(members[x], members[y], members[z], d);
      if (inside) {
        cur.insert(d);
        grew = true;
      }
    }
  }
  return cur;
}

}  // namespace seqgeom
