#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace seqgeom {

// All coordinates and derived quantities live in Q. mpq_class keeps values
// canonical (gcd 1, positive denominator), which the serialization relies on.
using Int = mpz_class;
using Rat = mpq_class;

enum class Sign : int { Neg = -1, Zero = 0, Pos = 1 };

inline Sign operator-(Sign s) { return static_cast<Sign>(-static_cast<int>(s)); }
inline int to_int(Sign s) { return static_cast<int>(s); }

Sign sign_from_int(int v);
Sign sign_of(const Rat& v);

// Sign hooks for the generic sweep; further scalar types overload these.
inline int field_sign(const Rat& v) { return sgn(v); }
inline int field_sign(long v) { return v < 0 ? -1 : (v > 0 ? 1 : 0); }

// mpq_class(num, den) does not reduce; this does.
inline Rat make_rat(long num, long den) {
  Rat v(num, den);
  v.canonicalize();
  return v;
}

// Serialization format: "p/q" with canonical p, q; plain "p" when q == 1.
std::string rat_to_string(const Rat& v);
Rat rat_from_string(std::string_view text);  // throws ParseError

}  // namespace seqgeom
