#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "seqgeom/allowseq.hpp"
#include "seqgeom/chirotope.hpp"
#include "seqgeom/exact.hpp"

namespace seqgeom {

// Finite convex geometry with an explicit family (ground capped at 20
// elements; family size can be exponential in the ground set).
class ConvexGeometry {
 public:
  ConvexGeometry(std::vector<std::string> ground, std::vector<uint32_t> family_masks);

  const std::vector<std::string>& ground() const { return ground_; }
  const std::vector<uint32_t>& family() const { return family_; }
  int size() const { return static_cast<int>(ground_.size()); }
  bool contains(uint32_t mask) const;
  std::vector<std::string> labels_of(uint32_t mask) const;
  uint32_t mask_of(const std::vector<std::string>& labels) const;

  bool operator==(const ConvexGeometry& o) const {
    return ground_ == o.ground_ && family_ == o.family_;
  }

 private:
  std::vector<std::string> ground_;
  std::vector<uint32_t> family_;  // sorted ascending
};

struct CgViolation {
  int axiom;  // 1, 2, 3
  uint32_t subject;
  uint32_t witness;  // axiom 2: the missing intersection; otherwise unused
};

struct CgAxiomReport {
  uint64_t total_violations = 0;
  std::vector<CgViolation> sample;
  bool ok() const { return total_violations == 0; }
};

// All subsets C with conv(C) intersected with P equal to C, by exact
// hull membership. Throws TooLarge beyond 20 points.
ConvexGeometry geometry_from_points(const std::vector<std::string>& labels,
                                    const std::vector<Point>& points);

// The convex geometry determined by an abstract order type: closure by the
// triangle criterion plus collinear betweenness recovered through witness
// elements. Throws TooLarge beyond 20 elements.
ConvexGeometry geometry_from_chirotope(const Chirotope& c);

// Verifies the three convex-geometry axioms over every subset of the ground.
CgAxiomReport check_cg_axioms(const ConvexGeometry& g);

struct DoubleRing {
  int k;
  std::vector<std::string> labels;  // r1..r2k then rp1..rp2k
  std::vector<Point> points;
  Rat r_out, r_in;
};

// 4k rational points on two nested rings with exactly the k diameter
// collinearities r_i, r'_i, r_{i+k}, r'_{i+k}. Verified before return.
DoubleRing double_ring(int k);

// Inclusion-maximal convex sets containing r_i but not r'_i (1-based i).
std::vector<std::vector<std::string>> maximal_convex_missing_pair(const ConvexGeometry& g, int i);

// The order type O_A on p-labels plus the 4k double-ring labels, where k is
// the move count of `a`. Requires every move to reverse a single substring.
Chirotope reduce_to_order_type(const AllowableSequence& a);

// Realization of O_A from a realization of `a`: ring points far out on the
// spanned lines, adapted until the chirotope equals reduce_to_order_type(a).
struct RingRealization {
  std::vector<std::string> labels;
  std::vector<Point> points;
};
RingRealization ring_realization(const std::vector<Point>& points);

}  // namespace seqgeom
