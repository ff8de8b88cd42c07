#pragma once

#include <map>
#include <vector>

#include "bkp/scalar.hpp"

namespace bkp {

// Laurent polynomial in several variables with exponent vectors bounded
// componentwise: terms with any |exponent| > bound are dropped on the fly.
// Coefficients at retained exponents are exact only where the discarded
// terms cannot feed back; callers restrict reads accordingly.
class MultiLaurent {
 public:
  using Expo = std::vector<int>;

  MultiLaurent(int nvars, int bound);

  int nvars() const { return nvars_; }
  int bound() const { return bound_; }
  const std::map<Expo, Scalar>& terms() const { return terms_; }

  static MultiLaurent constant(int nvars, int bound, const Scalar& c);

  void add_term(const Expo& e, const Scalar& c);
  Scalar coeff(const Expo& e) const;

  MultiLaurent operator-() const;
  MultiLaurent& operator+=(const MultiLaurent& o);
  friend MultiLaurent operator+(MultiLaurent a, const MultiLaurent& b) {
    return a += b;
  }
  friend MultiLaurent operator*(const MultiLaurent& a, const MultiLaurent& b);
  MultiLaurent scaled(const Scalar& c) const;

  // Maps this series into a wider variable set: variable i becomes variable
  // slot[i] with its exponent e multiplied into sign[i]^e (sign = +-1 realizes
  // substitutions like w -> -z). Slots must be distinct.
  MultiLaurent embedded(int nvars, const std::vector<int>& slot,
                        const std::vector<int>& sign) const;

  // Drops terms with any even exponent component (parity projector).
  MultiLaurent odd_part() const;

 private:
  bool keep(const Expo& e) const;
  int nvars_;
  int bound_;
  std::map<Expo, Scalar> terms_;
};

}  // namespace bkp
