#pragma once

#include <functional>

#include "bkp/laurent.hpp"
#include "bkp/scalar.hpp"

namespace bkp {

// Source of affine coordinates a(n, m) for n, m >= 0: antisymmetric in
// (n, m), with the metadata needed to reconstruct the weight data (r) and the
// beta truncation order every coefficient was built at.
struct AffineProvider {
  std::function<Scalar(long, long)> a;
  int r;
  int beta_order;
};

// Coordinates of the completed-cycle spin curve:
//   a(0, n) = p^n / (2 n!) * e(n),
//   a(n, m) = p^{n+m} / (4 m! n!) * (m - n)/(m + n) * e(m) e(n)  for n, m > 0,
// extended antisymmetrically, where e(k) = exp(k^{r+1}/(r+1) * beta) truncated
// at beta^B.
Scalar a_spin(long n, long m, int r, int B);

// Same shape with an arbitrary diagonal weight: e(k) = exp(f(k) * beta) for a
// rational-valued f on positive integers (f enters only through the beta
// exponent). f identically zero gives the weightless coordinates.
Scalar a_diagonal_f(long n, long m, const std::function<Rat(long)>& f, int B);

AffineProvider spin_provider(int r, int B);
AffineProvider diagonal_f_provider(const std::function<Rat(long)>& f, int r,
                                   int B);
// Provider with the same a(n,m) but p evaluated at a rational constant.
AffineProvider substituted_p(const AffineProvider& src, const Rat& v);

// Tilde coordinates: a(n, m) - a(n, 0) a(0, m).
Scalar modified(const AffineProvider& ap, long n, long m);

// Adapted basis element: z^k + sum_{i>=1} 2 (-1)^i modified(k, i) z^{-i},
// on the window [-I, k].
LaurentZ phi_basis(const AffineProvider& ap, long k, long I);

}  // namespace bkp
