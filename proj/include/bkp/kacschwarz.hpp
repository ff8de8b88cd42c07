#pragma once

#include <string>
#include <variant>
#include <vector>

#include "bkp/affine.hpp"
#include "bkp/laurent.hpp"

namespace bkp {

// Diagonal operator z^k -> multiplier(k) z^k with
// multiplier(k) = f_exp(k+l) * f_exp(-k), the truncation of e^{f(k+l)-f(k)}.
// Windows (and exact tails) are preserved.
struct DiagOperator {
  int l;
  int r;
  int beta_order;

  Scalar multiplier(long k) const;
  LaurentZ apply(const LaurentZ& s) const;
};

// Finite sum of composition pipelines of primitive actions on truncated
// Laurent series. Within a pipeline the rightmost primitive acts first.
// Window bookkeeping per primitive: d/dz maps [lo,hi] -> [lo-1,hi-1], z^m
// shifts by m, diagonal and scalar actions preserve the window; a sum of
// pipelines meets on the honestly-known intersection.
class LaurentOperator {
 public:
  struct Deriv {};
  struct ZPow {
    long m;
  };
  struct Scale {
    Scalar c;
  };
  using Primitive = std::variant<DiagOperator, Deriv, ZPow, Scale>;
  using Pipeline = std::vector<Primitive>;

  static LaurentOperator pipeline(Pipeline p);
  LaurentOperator& operator+=(const LaurentOperator& o);

  // P = E_1 d/dz - p E_2 z^{-2}, Q = E_{-1} z.
  static LaurentOperator P(int r, int B);
  static LaurentOperator Q(int r, int B);
  static LaurentOperator E(int l, int r, int B);

  LaurentZ apply(const LaurentZ& s) const;

 private:
  std::vector<Pipeline> pipelines_;
};

LaurentZ apply_E(int l, const LaurentZ& s, int r, int B);
LaurentZ apply_P(const LaurentZ& s, int r, int B);
LaurentZ apply_Q(const LaurentZ& s, int r, int B);

struct KSReport {
  bool pass = true;
  int r = 0;
  int beta_order = 0;
  long kmax = 0;
  long depth = 0;
  std::vector<std::string> checked_ranges;
  std::string first_failure;  // empty when pass
};

// Checks, coefficient by coefficient on the stated windows, with the basis
// built at internal depth I+2 so every stated degree is honestly known:
//   (a) P(phi_0) = 0 on [-I+2, 0];
//   (b) P(phi_k) = k e^{f(k)-f(k-1)} phi_{k-1} - p e^{f(k)-f(k-2)} phi_{k-2}
//       for 1 <= k <= kmax on [-I+2, k-1] (phi with negative index is 0);
//   (c) Q(phi_k) = e^{f(k)-f(k+1)} phi_{k+1} - p^{k+1} e^{f(k)}/(k+1)! phi_0
//       for 0 <= k <= kmax on [-I, k+1];
//   (d) (PQ - QP)(z^k) = z^k for |k| <= kmax (exact monomials, full window).
// Throws "insufficient window" before any comparison when I < kmax + 4.
KSReport verify_theorem(const AffineProvider& ap, long kmax, long I);

}  // namespace bkp
