#pragma once

#include <vector>

#include "seqgeom/errors.hpp"
#include "seqgeom/rational.hpp"

namespace seqgeom {

// Rational functions in one indeterminate omega, ordered by behaviour at
// omega -> +infinity. Comparing against "sufficiently large" scale choices
// becomes exact arithmetic: omega^j dominates every rational multiple of
// omega^i for i < j.
class OmegaRat {
 public:
  OmegaRat() = default;
  OmegaRat(const Rat& c) : num_(c == 0 ? Poly{} : Poly{c}), den_{Rat(1)} {}
  OmegaRat(long c) : OmegaRat(Rat(c)) {}

  static OmegaRat omega_pow(int k) {
    if (k >= 0) {
      Poly n(k + 1, Rat(0));
      n[k] = 1;
      return OmegaRat(std::move(n), Poly{Rat(1)});
    }
    Poly d(-k + 1, Rat(0));
    d[-k] = 1;
    return OmegaRat(Poly{Rat(1)}, std::move(d));
  }

  int sign() const {
    if (num_.empty()) return 0;
    return sgn(num_.back());
  }

  friend OmegaRat operator+(const OmegaRat& a, const OmegaRat& b) {
    return OmegaRat(add(mul(a.num_, b.den_), mul(b.num_, a.den_)), mul(a.den_, b.den_));
  }
  friend OmegaRat operator-(const OmegaRat& a, const OmegaRat& b) {
    return OmegaRat(sub(mul(a.num_, b.den_), mul(b.num_, a.den_)), mul(a.den_, b.den_));
  }
  friend OmegaRat operator*(const OmegaRat& a, const OmegaRat& b) {
    return OmegaRat(mul(a.num_, b.num_), mul(a.den_, b.den_));
  }
  friend OmegaRat operator/(const OmegaRat& a, const OmegaRat& b) {
    if (b.num_.empty()) throw Error("OmegaRat: division by zero");
    return OmegaRat(mul(a.num_, b.den_), mul(a.den_, b.num_));
  }
  OmegaRat operator-() const {
    Poly n = num_;
    for (Rat& c : n) c = -c;
    return OmegaRat(std::move(n), den_);
  }
  OmegaRat& operator+=(const OmegaRat& o) { return *this = *this + o; }
  OmegaRat& operator-=(const OmegaRat& o) { return *this = *this - o; }
  OmegaRat& operator*=(const OmegaRat& o) { return *this = *this * o; }

  bool operator<(const OmegaRat& o) const { return (*this - o).sign() < 0; }
  bool operator>(const OmegaRat& o) const { return (*this - o).sign() > 0; }
  bool operator==(const OmegaRat& o) const { return (*this - o).sign() == 0; }
  bool operator!=(const OmegaRat& o) const { return !(*this == o); }

  // Value at a concrete omega.
  Rat eval(const Rat& w) const {
    Rat n(0), d(0);
    for (size_t i = num_.size(); i-- > 0;) n = n * w + num_[i];
    for (size_t i = den_.size(); i-- > 0;) d = d * w + den_[i];
    if (d == 0) throw Error("OmegaRat: evaluation hits a pole");
    return n / d;
  }

  int degree() const {
    return static_cast<int>(num_.size()) - static_cast<int>(den_.size());
  }
  bool is_zero() const { return num_.empty(); }

 private:
  using Poly = std::vector<Rat>;

  OmegaRat(Poly n, Poly d) : num_(std::move(n)), den_(std::move(d)) {
    trim(num_);
    trim(den_);
    if (den_.empty()) throw Error("OmegaRat: zero denominator");
    if (sgn(den_.back()) < 0) {
      for (Rat& c : num_) c = -c;
      for (Rat& c : den_) c = -c;
    }
    if (num_.empty()) den_ = Poly{Rat(1)};
  }

  static void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
  }
  static Poly add(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return r;
  }
  static Poly sub(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return r;
  }
  static Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
      for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
  }

  Poly num_;          // empty means zero
  Poly den_{Rat(1)};  // leading coefficient positive
};

inline int field_sign(const OmegaRat& v) { return v.sign(); }

}  // namespace seqgeom
