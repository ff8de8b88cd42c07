#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bkp {

// Arbitrary-precision rational. Invariant: always in lowest terms with a
// positive denominator (mpq canonical form).
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(long n) : v_(n) {}  // NOLINT: implicit on purpose, 3 == Rat(3)
  Rat(long num, long den) : v_(num, den) {
    if (den == 0) throw std::invalid_argument("Rat: zero denominator");
    v_.canonicalize();
  }
  explicit Rat(const mpq_class& v) : v_(v) { v_.canonicalize(); }
  explicit Rat(const mpz_class& n) : v_(n) {}

  // Accepts "num", "num/den" or "-num/den" in base 10.
  static Rat from_string(const std::string& s) {
    mpq_class v;
    if (v.set_str(s, 10) != 0)
      throw std::invalid_argument("Rat: cannot parse '" + s + "'");
    v.canonicalize();
    return Rat(v);
  }

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) {
    if (o.is_zero()) throw std::invalid_argument("Rat: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }

  Rat inverse() const { return Rat(1) / *this; }
  Rat pow(long e) const {
    Rat acc(1), base = e >= 0 ? *this : inverse();
    for (long i = 0, n = e >= 0 ? e : -e; i < n; ++i) acc *= base;
    return acc;
  }

  std::string num_string() const { return v_.get_num().get_str(); }
  std::string den_string() const { return v_.get_den().get_str(); }
  // "n" for integers, "n/d" otherwise.
  std::string to_string() const {
    if (v_.get_den() == 1) return num_string();
    return num_string() + "/" + den_string();
  }

  const mpq_class& value() const { return v_; }

 private:
  mpq_class v_;
};

inline Rat rat_factorial(long n) {
  if (n < 0) throw std::invalid_argument("rat_factorial: negative argument");
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rat(f);
}

// k^e as an exact integer (e >= 0), safe for large e.
inline Rat int_pow(long k, long e) {
  if (e < 0) throw std::invalid_argument("int_pow: negative exponent");
  mpz_class p;
  mpz_class base(k);
  mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
  return Rat(p);
}

}  // namespace bkp
