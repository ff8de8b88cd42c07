#pragma once

#include <map>
#include <string>
#include <vector>

#include "bkp/scalar.hpp"

namespace bkp {

// Monomial in the odd times t_1, t_3, t_5, ...: entry i is the exponent of
// t_{2i+1}; trailing zeros are stripped so representations are unique.
using TMono = std::vector<int>;

long tmono_weight(const TMono& m);
void tmono_normalize(TMono& m);
std::string tmono_to_string(const TMono& m);

// Polynomial in the odd times with Scalar coefficients, truncated at total
// weight W (weight of t_k is k); monomials above W are dropped on the fly.
class TPoly {
 public:
  explicit TPoly(int W);

  static TPoly one(int W);
  static TPoly var(long k, int W);  // t_k, k odd; zero when k > W
  static TPoly monomial(TMono m, const Scalar& c, int W);

  int weight_cutoff() const { return W_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<TMono, Scalar>& terms() const { return terms_; }
  Scalar coeff(const TMono& m) const;

  void add_term(TMono m, const Scalar& c);

  TPoly operator-() const;
  TPoly& operator+=(const TPoly& o);
  friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
  friend TPoly operator-(TPoly a, const TPoly& b) { return a += -b; }
  friend TPoly operator*(const TPoly& a, const TPoly& b);
  TPoly scaled(const Scalar& c) const;
  TPoly truncated(int W) const;

  // Compare on the common weight truncation, coefficientwise.
  friend bool operator==(const TPoly& a, const TPoly& b) {
    int w = a.W_ < b.W_ ? a.W_ : b.W_;
    return a.truncated(w).terms_ == b.truncated(w).terms_;
  }
  friend bool operator!=(const TPoly& a, const TPoly& b) { return !(a == b); }

  // Evaluation at t = (v, 0, 0, ...): only pure powers of t_1 survive.
  Scalar eval_t1(const Scalar& v) const;

  std::string to_string() const;

 private:
  int W_;
  std::map<TMono, Scalar> terms_;
};

}  // namespace bkp
