#pragma once

#include <string>
#include <vector>

#include "seqgeom/chirotope.hpp"
#include "seqgeom/exact.hpp"

namespace seqgeom {

// One reversed substring, 0-based into the current permutation.
struct Interval {
  int start = 0;
  int len = 0;
  bool operator==(const Interval&) const = default;
};

// One step between consecutive permutations: disjoint reversals, sorted by
// start. Parallel switches of one rotation angle share a move.
struct Move {
  std::vector<Interval> intervals;
  bool operator==(const Move&) const = default;
};

// Elements are 1..n. Permutations are materialized lazily from first+moves.
struct AllowableSequence {
  int n = 0;
  std::vector<int> first;
  std::vector<Move> moves;
  bool operator==(const AllowableSequence&) const = default;
};

struct ValidationReport {
  bool generalized_ok = false;
  bool simple = false;
  std::vector<std::string> violations;
};

struct SwitchRecord {
  int move_index;
  std::vector<int> members;  // element set of one reversed substring
};

ValidationReport validate(const AllowableSequence& a);

// Sequence of the rotating-projection sweep: first orders by ascending x
// (ties ascending y); moves fire at angles theta in (0, 180] where the
// projection direction is perpendicular to a spanned line. Collinear groups
// reverse as one interval, parallel classes as several intervals of one move.
AllowableSequence extract_from_points(const std::vector<Point>& points);

// The abstract order type determined by the sequence. Ground labels "1".."n".
Chirotope induced_chirotope(const AllowableSequence& a);

// Deterministic representative of the class of `a` under cyclic shifts of the
// start direction and reflection of the sweep.
AllowableSequence canonical_form(const AllowableSequence& a);

// All k+1 permutations, first included.
std::vector<std::vector<int>> permutations(const AllowableSequence& a);

std::vector<SwitchRecord> switches(const AllowableSequence& a);

}  // namespace seqgeom
