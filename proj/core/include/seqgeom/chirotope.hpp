#pragma once

#include <array>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "seqgeom/exact.hpp"

namespace seqgeom {

struct AxiomViolation {
  int axiom;                  // 1 or 3
  std::array<int, 6> tuple;   // ground positions; unused slots -1
};

struct AxiomReport {
  bool identically_zero = false;
  uint64_t total_violations = 0;
  std::vector<AxiomViolation> sample;  // capped
  bool ok() const { return total_violations == 0; }
};

// Orientation map on ordered triples of a labeled ground set. Values are
// stored for position triples i<j<k only; alternation is applied on lookup,
// so axiom 2 holds by representation.
class Chirotope {
 public:
  Chirotope(std::vector<std::string> ground, std::vector<int8_t> sorted_triples);

  static Chirotope from_points(const std::vector<std::string>& labels,
                               const std::vector<Point>& pts);

  int size() const { return n_; }
  const std::vector<std::string>& ground() const { return ground_; }
  int index_of(const std::string& label) const;  // throws Error if absent

  Sign orient(int i, int j, int k) const;  // any argument order; 0 on repeats
  const std::vector<int8_t>& table() const { return table_; }

  bool is_simple() const;  // no zero triple among distinct elements

  AxiomReport check_axioms(size_t sample_cap = 16) const;

  // Convex closure for simple chirotopes: adds every element inside or on a
  // triangle spanned by members, iterated to a fixpoint. Throws NotSimple.
  std::set<int> closure(const std::set<int>& s) const;

  // d inside or on triangle (a,b,c): the three orientations with d each equal
  // orient(a,b,c) or zero.
  bool in_triangle(int a, int b, int c, int d) const;

  bool operator==(const Chirotope& o) const {
    return ground_ == o.ground_ && table_ == o.table_;
  }

  static size_t triple_count(int n) {
    return static_cast<size_t>(n) * (n - 1) * (n - 2) / 6;
  }
  // Index of sorted triple i<j<k in the flat table.
  size_t triple_index(int i, int j, int k) const;

 private:
  int n_;
  std::vector<std::string> ground_;
  std::vector<int8_t> table_;
};

}  // namespace seqgeom
