#pragma once

#include <vector>

#include "bkp/affine.hpp"
#include "bkp/partitions.hpp"
#include "bkp/schurq.hpp"
#include "bkp/tpoly.hpp"

namespace bkp {

// Vacuum pairing of two neutral-fermion generators:
//   <phi_i phi_j> = (-1)^j       for i = -j < 0,
//   <phi_0 phi_0> = 1/2,
//   0 otherwise (in particular <phi_k phi_{-k}> = 0 for k > 0).
Rat pair_vev(long i, long j);

// Vacuum expectation of a word phi_{w_0} phi_{w_1} ... by Wick's theorem:
// contract the first letter against each later position j with sign
// (-1)^{j-1} times the expectation of the remaining word. Odd words vanish.
Rat vev(const std::vector<long>& word);

// Coefficient of Q_mu(t/2) in the expansion of the tau-function:
//   (-1)^{ceil(l/2)} Pf( a(mu_i, mu_j) )  over (mu_1..mu_l) padded with a
// trailing 0 when l is odd.
Scalar tau_coeff(const AffineProvider& ap, const StrictPartition& mu);

// Sum of tau_coeff(mu) * Q_mu(t/2) over strict partitions of weight <= W.
TPoly tau_expand(const AffineProvider& ap, int W);

// Independent oracle for the same coefficient, straight from the fermionic
// average: expand <(phi_0?) phi_{-mu_l} ... phi_{-mu_1} exp(A)> in powers of
// A and evaluate by Wick, then normalize by 2^{-floor(l/2)} (-1)^{|mu|}.
// The operator A is restricted to indices {0} union parts(mu): letters at any
// other index cannot pair to a nonzero value against the bra word, so the
// restriction is exact. `order` bounds the A-power; powers beyond l cannot
// contribute, and the default order ceil(l/2)+1 is checked by tests to agree
// with order+1.
Scalar oracle_coeff(const AffineProvider& ap, const StrictPartition& mu,
                    long order);
Scalar oracle_coeff(const AffineProvider& ap, const StrictPartition& mu);

// <phi_i phi_j exp(A)> computed by conjugating each generator past exp(A)
// (for i <= 0 the conjugate picks up sum_m 2 (-1)^i (-a(-i,m) +
// a(-i,0) a(0,m)) phi_m; generators with positive index commute through)
// and pairing the results against the bare vacuum.
Scalar pair_vev_conjugated(const AffineProvider& ap, long i, long j);

// Same average by direct series expansion in A (exact at order 2: each
// A-block needs a negative partner for its positive letter and the word has
// at most two). Tests pin this equal to pair_vev_conjugated.
Scalar pair_vev_series(const AffineProvider& ap, long i, long j);

}  // namespace bkp
