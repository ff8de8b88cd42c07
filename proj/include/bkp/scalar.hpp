#pragma once

#include <algorithm>
#include <limits>
#include <map>
#include <utility>

#include "bkp/rat.hpp"

namespace bkp {

// Element of Q[p, p^-1][[beta]] truncated in beta: a finite sum of monomials
// c * p^a * beta^b with rational c. Each value carries the beta order it is
// trusted to; kBetaExact marks values never truncated (polynomials known
// exactly). Orders combine by min through + and *, and terms with beta
// exponent above the trusted order are dropped. The p direction is never
// truncated.
class Scalar {
 public:
  static constexpr int kBetaExact = std::numeric_limits<int>::max();
  using Key = std::pair<int, int>;  // (p exponent, beta exponent)

  Scalar() : order_(kBetaExact) {}

  static Scalar constant(const Rat& c) { return monomial(0, 0, c); }
  static Scalar p_pow(int a) { return monomial(a, 0, Rat(1)); }
  static Scalar beta_pow(int b) { return monomial(0, b, Rat(1)); }
  static Scalar monomial(int p_exp, int beta_exp, const Rat& c);

  int beta_order() const { return order_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Key, Rat>& terms() const { return terms_; }

  // Coefficient of p^a beta^b; exact zero when absent (caller is responsible
  // for respecting beta_order when reading near the truncation boundary).
  Rat coeff(int p_exp, int beta_exp) const;

  // Coefficient of beta^b as a polynomial in p (map p exponent -> coefficient).
  std::map<int, Rat> beta_slice(int beta_exp) const;

  // Re-truncates to order B (keeps beta exponents <= B).
  Scalar truncated(int B) const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& scale(const Rat& c);
  Scalar pow(int e) const;

  // Substitutes a rational value for p (beta structure unchanged).
  Scalar substitute_p(const Rat& v) const;

  // Values are comparable only up to the shared trusted order: both sides are
  // truncated to min(order) before the term maps are compared.
  friend bool operator==(const Scalar& a, const Scalar& b) {
    int m = std::min(a.order_, b.order_);
    return a.truncated(m).terms_ == b.truncated(m).terms_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
  friend bool operator<(const Scalar& a, const Scalar& b) {
    if (a.order_ != b.order_) return a.order_ < b.order_;
    return a.terms_ < b.terms_;
  }

  std::string to_string() const;

 private:
  void drop_high_beta();
  std::map<Key, Rat> terms_;  // nonzero coefficients only
  int order_;
};

// exp(x * beta) truncated at beta^B: sum_{j<=B} x^j beta^j / j!.
Scalar exp_beta(const Rat& x, int B);

// exp(f(k) * beta) truncated at beta^B for the completed-cycle weight
// f(k) = k^(r+1) / (r+1); odd in k when r is even. f_exp(0) == 1.
Scalar f_exp(long k, int r, int B);

}  // namespace bkp
