#pragma once

#include <map>
#include <string>
#include <utility>

#include "bkp/tpoly.hpp"

namespace bkp {

// Polynomial in two families of odd times t_1,t_3,... and s_1,s_3,... with
// Scalar coefficients, truncated at joint weight W (weight of t_k and s_k is
// k). Keys are pairs (t-monomial, s-monomial).
class TSPoly {
 public:
  using Key = std::pair<TMono, TMono>;

  explicit TSPoly(int W);

  static TSPoly one(int W);
  // Embeds a polynomial in the odd times as pure-t (or pure-s) content.
  static TSPoly from_t(const TPoly& p, int W);
  static TSPoly from_s(const TPoly& p, int W);

  int weight_cutoff() const { return W_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Key, Scalar>& terms() const { return terms_; }
  Scalar coeff(const TMono& t, const TMono& s) const;

  void add_term(TMono t, TMono s, const Scalar& c);

  TSPoly operator-() const;
  TSPoly& operator+=(const TSPoly& o);
  friend TSPoly operator+(TSPoly a, const TSPoly& b) { return a += b; }
  friend TSPoly operator-(TSPoly a, const TSPoly& b) { return a += -b; }
  friend TSPoly operator*(const TSPoly& a, const TSPoly& b);
  TSPoly scaled(const Scalar& c) const;

  std::string to_string() const;

 private:
  int W_;
  std::map<Key, Scalar> terms_;
};

}  // namespace bkp
