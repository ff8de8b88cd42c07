#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <stdexcept>

#include "bkp/hirota.hpp"
#include "bkp/wave.hpp"
#include "doctest.h"

using namespace bkp;

namespace {

// 2 * sign * d/dt_1 of the weight-(W+1) tau expansion, truncated to W.
TPoly shifted_slice_m1(const AffineProvider& ap, int W, int sign) {
  TPoly tau = tau_expand(ap, W + 1);
  TPoly out(W);
  for (const auto& [m, c] : tau.terms()) {
    if (m.empty() || m[0] == 0) continue;
    TMono d = m;
    --d[0];
    Scalar v = c;
    v.scale(Rat(2L * sign * m[0]));
    out += TPoly::monomial(std::move(d), v, W);
  }
  return out;
}

}  // namespace

TEST_CASE("shifted tau slices") {
  AffineProvider ap = spin_provider(2, 2);
  const int W = 5;
  std::map<long, TPoly> minus = shift_tau(ap, W, -1, 4);
  std::map<long, TPoly> plus = shift_tau(ap, W, +1, 4);

  // Shedding nothing reproduces the expansion itself.
  CHECK(minus.at(0) == tau_expand(ap, W));
  CHECK(plus.at(0) == tau_expand(ap, W));

  // One unit of weight can only come off a t_1 power.
  CHECK(minus.at(-1) == shifted_slice_m1(ap, W, -1));
  CHECK(plus.at(-1) == shifted_slice_m1(ap, W, +1));

  // Odd shed weight flips with the sign, even shed weight does not.
  CHECK(plus.at(-3) == minus.at(-3).scaled(Scalar::constant(Rat(-1))));
  CHECK(plus.at(-2) == minus.at(-2));
  CHECK(plus.at(-4) == minus.at(-4));

  CHECK_THROWS_AS(shift_tau(ap, W, 0, 4), std::invalid_argument);
  CHECK_THROWS_AS(shift_tau(ap, W, 1, -1), std::invalid_argument);
}

TEST_CASE("bilinear residue identity") {
  HirotaReport rep = hirota_check(spin_provider(2, 2), 4, 2, 4);
  CHECK(rep.pass);
  CHECK(rep.W == 4);
  CHECK(rep.beta_order == 2);
  CHECK(rep.depth == 4);
  CHECK(rep.checked_monomials > 0);
  CHECK(rep.first_failure.empty());

  // Also holds with the weights turned off entirely.
  AffineProvider flat = diagonal_f_provider([](long) { return Rat(0); }, 2, 1);
  CHECK(hirota_check(flat, 4, 1, 4).pass);
}

TEST_CASE("bilinear identity holds across the coordinate cell") {
  // Every antisymmetric coordinate matrix parametrizes a point of the orbit,
  // so the identity is a polynomial identity in the coordinates: passing on an
  // arbitrary antisymmetric provider exercises the whole expansion machinery,
  // not one special point.
  AffineProvider odd{[](long n, long m) {
                       Scalar v = Scalar::constant(
                           Rat(n - m, 1 + (n + m) % 5) + Rat(n * m * (n - m)));
                       return v;
                     },
                     2, Scalar::kBetaExact};
  HirotaReport rep = hirota_check(odd, 4, 0, 4);
  CHECK(rep.pass);
  CHECK(rep.first_failure.empty());
}

TEST_CASE("bilinear check window precondition") {
  CHECK_THROWS_WITH_AS(hirota_check(spin_provider(2, 1), 4, 1, 3),
                       "hirota_check: insufficient I (need I >= W)",
                       std::invalid_argument);
}

TEST_CASE("principal specialization hits the adapted basis") {
  for (int r : {2, 4}) {
    AffineProvider ap = spin_provider(r, 2);
    LaurentZ w = wave_principal(ap, 12);
    LaurentZ phi0 = phi_basis(ap, 0, 12);
    for (long d = -12; d <= 0; ++d) CHECK(w.at(d) == phi0.at(d));
  }
}

TEST_CASE("derivatives of the wave function stay in the span") {
  SpanReport rep = span_check(spin_provider(2, 2), 3, 12, 5);
  CHECK(rep.pass);
  CHECK(rep.kmax == 3);
  CHECK(rep.depth == 12);
  CHECK(rep.weight == 5);
  CHECK(rep.first_failure.empty());
  CHECK_FALSE(rep.checked_ranges.empty());
  REQUIRE(rep.expansion.size() == 4);
  for (size_t k = 0; k < rep.expansion.size(); ++k) {
    REQUIRE(rep.expansion[k].size() == k + 1);
    CHECK_FALSE(rep.expansion[k][k].is_zero());
  }
  // At t_1 = 0 the wave function is phi_0 itself.
  CHECK(rep.expansion[0][0] == Scalar::constant(Rat(1)));
}

TEST_CASE("span check preconditions") {
  AffineProvider ap = spin_provider(2, 1);
  CHECK_THROWS_AS(span_check(ap, -1, 10, 5), std::invalid_argument);
  CHECK_THROWS_WITH_AS(span_check(ap, 4, 10, 3),
                       "span_check: weight must be >= kmax",
                       std::invalid_argument);
}
