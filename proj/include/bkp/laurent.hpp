#pragma once

#include <vector>

#include "bkp/scalar.hpp"

namespace bkp {

// Truncated Laurent series in one variable z with Scalar coefficients.
// Window model: coefficients above hi are exactly zero (the series has a hard
// top degree), coefficients on [lo, hi] are stored and exact, and coefficients
// below lo are unknown unless tail_exact is set (series built from finitely
// many monomials, hence zero below lo as well). A degree is "trusted" when the
// model can answer for it; at(d) throws on untrusted degrees.
class LaurentZ {
 public:
  LaurentZ(long lo, long hi, bool tail_exact = false);

  static LaurentZ zero(long lo, long hi) { return LaurentZ(lo, hi, false); }
  // Exact monomial c * z^deg (tail_exact, so known everywhere).
  static LaurentZ monomial(long deg, const Scalar& c);

  long lo() const { return lo_; }
  long hi() const { return hi_; }
  bool tail_exact() const { return tail_exact_; }

  bool trusted(long deg) const {
    return deg > hi_ || deg >= lo_ || tail_exact_;
  }
  const Scalar& at(long deg) const;        // throws on untrusted degree
  void set(long deg, const Scalar& c);     // deg must lie in [lo, hi]
  void add_at(long deg, const Scalar& c);  // deg must lie in [lo, hi]

  // True when every trusted coefficient in [from, to] is zero (degrees outside
  // the trusted region cause a throw).
  bool zero_on(long from, long to) const;

  LaurentZ operator-() const;
  LaurentZ& operator+=(const LaurentZ& o);
  LaurentZ scaled(const Scalar& c) const;
  // d/dz: window maps [lo, hi] -> [lo-1, hi-1].
  LaurentZ derivative() const;
  // z^m * s: window shifts by m.
  LaurentZ shifted(long m) const;
  // Restrict to a narrower window (error when widening a non-exact tail).
  LaurentZ clipped(long lo, long hi) const;

  std::string to_string() const;

 private:
  long lo_, hi_;
  bool tail_exact_;
  std::vector<Scalar> c_;  // index d - lo_
};

// Sum with honest window bookkeeping: hi = max(hi), lo = max lo over inputs
// with unknown tails (min when both are exact, and the result stays exact).
LaurentZ add_laurent(const LaurentZ& a, const LaurentZ& b);
LaurentZ sub_laurent(const LaurentZ& a, const LaurentZ& b);

// Windowed convolution. hi = a.hi + b.hi; lo is the largest degree whose
// coefficient is fully determined by the trusted inputs: the support floor
// a.lo + b.lo raised by a.lo + b.hi (resp. b.lo + a.hi) when b (resp. a) has
// an unknown tail. Throws when the resulting window is empty.
LaurentZ mul_laurent(const LaurentZ& a, const LaurentZ& b);

bool equal_on(const LaurentZ& a, const LaurentZ& b, long from, long to);

inline LaurentZ operator+(const LaurentZ& a, const LaurentZ& b) {
  return add_laurent(a, b);
}
inline LaurentZ operator-(const LaurentZ& a, const LaurentZ& b) {
  return sub_laurent(a, b);
}
inline LaurentZ operator*(const LaurentZ& a, const LaurentZ& b) {
  return mul_laurent(a, b);
}

}  // namespace bkp
