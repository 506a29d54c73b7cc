#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "seqgeom/allowseq.hpp"
#include "seqgeom/exact.hpp"

namespace seqgeom {

// Constraint system x_i + x_j = x_k / x_i * x_j = x_k over totally ordered
// variables 1 = x_1 < x_2 < ... < x_n; each variable the output of at most
// one constraint.
struct NormalForm {
  struct Constraint {
    enum class Kind { Add, Mul };
    Kind kind;
    int i, j, k;
    bool operator==(const Constraint&) const = default;
  };
  int n_vars = 0;
  std::vector<Constraint> constraints;
  bool operator==(const NormalForm&) const = default;
};

// Line format: "x3 = x2 + x2" / "x4 = x2 * x3", optional "vars <n>" header.
NormalForm parse_normal_form(std::string_view text);
std::string normal_form_to_string(const NormalForm& nf);

struct Witness {
  std::vector<Rat> values;  // x_1..x_n
};

// Throws UnsatisfiedWitness unless x_1 = 1, values strictly increase, and
// every constraint holds exactly.
void check_witness(const NormalForm& nf, const Witness& w);

struct GadgetLayout {
  struct Gadget {
    NormalForm::Constraint constraint;
    std::map<std::string, Point> points;  // roles a, c, d (plus b for Mul)
  };
  std::vector<std::string> labels;  // frame first, then gadget points
  std::vector<Point> points;
  std::vector<Gadget> gadgets;
  std::vector<Rat> values;  // the witness, for incidence checks
  Rat omega;                // substituted scale parameter
};

// Von Staudt gadgets in the chart with the variable line at infinity:
// variables are slopes, addition pins slope(d->c) = x + y through the frame
// origin, multiplication pins slope(T->Q) = x * y through the unit direction.
// Scales are exact omega powers substituted with a verified concrete value.
GadgetLayout place_gadgets(const NormalForm& nf, const Witness& w);

// Every gadget identity checked exactly on the layout; empty means all hold.
std::vector<std::string> gadget_incidence_violations(const GadgetLayout& layout);

// The allowable sequence of the construction, computed over the omega field:
// independent of any witness value choice.
AllowableSequence build_sequence(const NormalForm& nf);

struct Realization {
  std::vector<std::string> labels;
  std::vector<Point> points;
};

// A rational realization of the order type induced by build_sequence(nf),
// built with order-respecting surrogate values; exact equality with the
// induced chirotope is verified before returning.
Realization realize_induced_order_type(const NormalForm& nf);

// Lemma-4 style replacement on the sequence: points on one or two spanned
// lines become four almost-parallelogram points; output is simple. `order`
// is the construction order of the elements.
AllowableSequence simplify_sequence(const AllowableSequence& a, const std::vector<int>& order);

// The numeric oracle: the same replacement performed in a rational
// realization; returns the final point configuration.
std::vector<Point> micro_model_simplify(const std::vector<Point>& points,
                                        const std::vector<int>& order);

}  // namespace seqgeom
