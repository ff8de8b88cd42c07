#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <stdexcept>
#include <vector>

#include "bkp/partitions.hpp"
#include "bkp/tau.hpp"
#include "doctest.h"

using namespace bkp;

namespace {

StrictPartition sp(std::vector<long> parts) {
  StrictPartition mu;
  mu.parts = std::move(parts);
  return mu;
}

// Injective pair labels for a symbolic provider: a(n,m) = p^{2^{label}} for
// n < m. A product of two coordinates with distinct labels is p^{2^a + 2^b},
// a != b, and such sums determine {a, b}, so quadratic identities checked on
// this provider hold identically in the coordinates.
AffineProvider symbolic_provider() {
  auto a = [](long n, long m) -> Scalar {
    if (n == m) return Scalar();
    bool flipped = n > m;
    if (flipped) std::swap(n, m);
    int label = static_cast<int>(n * 6 + m - 1);  // n < m <= 6, label <= 28
    Scalar s = Scalar::p_pow(1 << label);
    return flipped ? -s : s;
  };
  return AffineProvider{a, 2, Scalar::kBetaExact};
}

Scalar sym(const AffineProvider& ap, long n, long m) { return ap.a(n, m); }

}  // namespace

TEST_CASE("pair expectations") {
  CHECK(pair_vev(0, 0) == Rat(1, 2));
  for (long k = 1; k <= 6; ++k) {
    CHECK(pair_vev(-k, k) == Rat(k % 2 == 0 ? 1 : -1));
    CHECK(pair_vev(k, -k) == Rat(0));
    CHECK(pair_vev(k, k) == Rat(0));
    CHECK(pair_vev(0, k) == Rat(0));
    CHECK(pair_vev(-k, 0) == Rat(0));
  }
}

TEST_CASE("Wick evaluation of small words") {
  CHECK(vev({}) == Rat(1));
  CHECK(vev({0}) == Rat(0));
  CHECK(vev({-1, 1}) == Rat(-1));
  CHECK(vev({0, 0}) == Rat(1, 2));
  CHECK(vev({-2, -1, 1, 2}) == Rat(-1));
  CHECK(vev({-1, 0, 0, 1}) == Rat(-1, 2));
  CHECK(vev({-1, 1, 0}) == Rat(0));  // odd length
}

TEST_CASE("nested pair words reproduce the closed form") {
  // For k_1 > ... > k_n >= 0:
  // <phi_{-k_n} ... phi_{-k_1} phi_{k_1} ... phi_{k_n}> is
  // (-1)^{k_1+...+k_n} for k_n > 0 and half the k_n-less sign for k_n = 0.
  for (long w = 1; w <= 6; ++w) {
    for (const auto& mu : strict_partitions(w)) {
      std::vector<long> word;
      for (auto it = mu.parts.rbegin(); it != mu.parts.rend(); ++it)
        word.push_back(-*it);
      for (long k : mu.parts) word.push_back(k);
      long s = mu.weight();
      CHECK(vev(word) == Rat(s % 2 == 0 ? 1 : -1));
      // Same word with an extra zero index on both ends: half the value.
      std::vector<long> word0;
      word0.push_back(0);
      word0.insert(word0.end(), word.begin(), word.end());
      word0.push_back(0);
      CHECK(vev(word0) == Rat(s % 2 == 0 ? 1 : -1, 2));
    }
  }
}

TEST_CASE("expansion coefficients: the four displayed families") {
  AffineProvider ap = symbolic_provider();
  SUBCASE("one part") {
    for (long n = 1; n <= 5; ++n)
      CHECK(tau_coeff(ap, sp({n})) == sym(ap, 0, n));
  }
  SUBCASE("two parts") {
    for (long m = 2; m <= 5; ++m)
      for (long n = 1; n < m; ++n)
        CHECK(tau_coeff(ap, sp({m, n})) == sym(ap, n, m));
  }
  SUBCASE("three parts") {
    for (long m = 3; m <= 5; ++m)
      for (long n = 2; n < m; ++n)
        for (long l = 1; l < n; ++l) {
          Scalar expect = sym(ap, n, m) * sym(ap, 0, l) -
                          sym(ap, l, m) * sym(ap, 0, n) +
                          sym(ap, 0, m) * sym(ap, l, n);
          CHECK(tau_coeff(ap, sp({m, n, l})) == expect);
        }
  }
  SUBCASE("four parts") {
    for (long m = 4; m <= 5; ++m)
      for (long n = 3; n < m; ++n)
        for (long l = 2; l < n; ++l)
          for (long k = 1; k < l; ++k) {
            Scalar expect = sym(ap, n, m) * sym(ap, k, l) -
                            sym(ap, l, m) * sym(ap, k, n) +
                            sym(ap, k, m) * sym(ap, l, n);
            CHECK(tau_coeff(ap, sp({m, n, l, k})) == expect);
          }
  }
  SUBCASE("empty partition") {
    CHECK(tau_coeff(ap, sp({})) == Scalar::constant(Rat(1)));
  }
}

TEST_CASE("fermionic oracle agrees with the Pfaffian expansion") {
  AffineProvider spin = spin_provider(2, 2);
  AffineProvider flat = diagonal_f_provider([](long) { return Rat(0); }, 2, 2);
  for (long w = 1; w <= 6; ++w) {
    for (const auto& mu : strict_partitions(w)) {
      CHECK(tau_coeff(spin, mu) == oracle_coeff(spin, mu));
      CHECK(tau_coeff(flat, mu) == oracle_coeff(flat, mu));
    }
  }
}

TEST_CASE("oracle expansion order") {
  AffineProvider ap = spin_provider(2, 2);
  StrictPartition mu = sp({3, 2, 1});
  long needed = 2;  // ceil(3/2)
  CHECK(oracle_coeff(ap, mu, needed) == oracle_coeff(ap, mu, needed + 1));
  CHECK(oracle_coeff(ap, mu, needed + 2) == oracle_coeff(ap, mu));
  CHECK_THROWS_WITH_AS(
      oracle_coeff(ap, mu, 1),
      "oracle_coeff: order too small, need at least 2",
      std::invalid_argument);
}

TEST_CASE("pair averages against the exponential") {
  AffineProvider ap = spin_provider(2, 3);
  for (long n = 1; n <= 4; ++n) {
    // <phi_{-n} phi_n e^A> collapses to the bare pairing: the conjugation
    // tail pairs phi_n against phi_0 or phi_n, both zero.
    CHECK(pair_vev_conjugated(ap, -n, n) ==
          Scalar::constant(Rat(n % 2 == 0 ? 1 : -1)));
    CHECK(pair_vev_conjugated(ap, n, n).is_zero());
  }
  for (long i = -4; i <= 4; ++i)
    for (long j = -4; j <= 4; ++j)
      CHECK(pair_vev_conjugated(ap, i, j) == pair_vev_series(ap, i, j));
}

TEST_CASE("tau expansion leading terms") {
  AffineProvider ap = spin_provider(2, 1);
  CHECK(tau_expand(ap, 0) == TPoly::one(0));
  TPoly tau = tau_expand(ap, 3);
  TMono t1{1};
  CHECK(tau.coeff(t1).coeff(1, 0) == Rat(1, 2));
  CHECK(tau.coeff(t1).coeff(1, 1) == Rat(1, 6));
  TMono t3{0, 1};
  // beta^0 of [t_3] cancels between the (3) and (2,1) contributions.
  CHECK(tau.coeff(t3).coeff(3, 0) == Rat(0));
  CHECK(tau.coeff(t3).coeff(3, 1) == Rat(1, 2));
  CHECK(tau.coeff(TMono{}) == Scalar::constant(Rat(1)));
}
