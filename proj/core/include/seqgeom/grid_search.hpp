#pragma once

#include <variant>
#include <vector>

#include "seqgeom/allowseq.hpp"
#include "seqgeom/chirotope.hpp"

namespace seqgeom {

// Brute-force realizability oracle over integer grids. A NotFound result is
// evidence up to the searched grid only, never a proof.
struct GridSearchSpec {
  std::variant<AllowableSequence, Chirotope> target;
  int grid_size = 3;     // coordinates range over {0..grid_size-1}^2
  bool relabel = false;  // also accept any relabeling of the target
};

struct GridSearchResult {
  bool found = false;
  std::vector<Point> points;  // lexicographically least witness when found
  int searched_up_to = 0;
};

GridSearchResult grid_search(const GridSearchSpec& spec);  // throws TargetInvalid

}  // namespace seqgeom
