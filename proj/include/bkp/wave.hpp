#pragma once

#include <string>
#include <vector>

#include "bkp/affine.hpp"
#include "bkp/laurent.hpp"
#include "bkp/tau.hpp"

namespace bkp {

// Principal specialization of the tau expansion: tau at t_k = -2/(k z^k),
// summed over strict partitions of weight <= I; trusted on [-I, 0].
LaurentZ wave_principal(const AffineProvider& ap, long I);

struct SpanReport {
  bool pass = true;
  long kmax = 0;
  long depth = 0;
  int weight = 0;
  // expansion[k][j] = coefficient of phi_j in d^k/dt_1^k w(0; z), j = 0..k.
  std::vector<std::vector<Scalar>> expansion;
  std::vector<std::string> checked_ranges;
  std::string first_failure;
};

// Verifies that the t_1-derivatives of the wave function lie in the span of
// the adapted basis: w(t_1; z) = e^{t_1 z} tau(t_1 - 2/z, -2/(3 z^3), ...) /
// tau(t_1, 0, ...) is expanded as a t_1-series of order <= kmax (the shifted
// tau restricted to the first time is computed in a bigraded ring keyed by
// (t_1-degree, z-degree); the denominator is inverted as a geometric series,
// its constant term being 1). For each k <= kmax, k! times the t_1^k
// coefficient is resolved against phi_k, ..., phi_0 by back-substitution on
// the z^j coefficients, j = k down to 0, and the residual tail must vanish on
// [-I + kmax, -1]. The tau expansion runs to weight max(W, I): z-degrees down
// to -I + kmax in the t_1^k coefficient are trusted only from that weight on.
SpanReport span_check(const AffineProvider& ap, long kmax, long I, int W);

}  // namespace bkp
