#pragma once

#include <map>
#include <string>

#include "bkp/affine.hpp"
#include "bkp/tau.hpp"
#include "bkp/tspoly.hpp"

namespace bkp {

// tau(t + sign * 2 [z^{-1}]) with [z^{-1}] = (1/z, 1/(3 z^3), ...): the tau
// expansion with t_k replaced by t_k + sign * 2/(k z^k), collected by z-degree
// d in [-I, 0]; each coefficient is a polynomial of weight <= W. Built from
// tau_expand at weight W + I, which covers every monomial that can shed at
// most I units of weight into negative z-powers.
std::map<long, TPoly> shift_tau(const AffineProvider& ap, int W, int sign,
                                long I);

struct HirotaReport {
  bool pass = true;
  int W = 0;
  int beta_order = 0;
  long depth = 0;
  long checked_monomials = 0;
  std::string first_failure;
};

// Verifies the bilinear residue identity up to joint weight W: the z^0
// coefficient of e^{xi(t-s,z)} tau(t - 2[z^{-1}]) tau(s + 2[z^{-1}]) equals
// tau(t) tau(s), coefficientwise in (t, s) and in beta up to order B.
// Requires I >= W: the exponential factor carries z-degrees 0..W only, so
// shifted-tau degrees below -W cannot reach z^0.
HirotaReport hirota_check(const AffineProvider& ap, int W, int B, long I);

}  // namespace bkp
