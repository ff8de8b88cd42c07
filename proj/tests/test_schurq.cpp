#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <vector>

#include "bkp/partitions.hpp"
#include "bkp/schurq.hpp"
#include "doctest.h"

using namespace bkp;

namespace {

TMono mono(std::vector<int> e) { return e; }

// Rational power-series exponential: given c_1..c_N (no constant term),
// returns a_0..a_N with sum a_j x^j = exp(sum c_k x^k), via the derivative
// recurrence n a_n = sum_k k c_k a_{n-k}. Independent route to the one-row
// polynomials.
std::vector<Rat> series_exp(const std::vector<Rat>& c, int N) {
  std::vector<Rat> a(static_cast<size_t>(N) + 1, Rat(0));
  a[0] = Rat(1);
  for (int n = 1; n <= N; ++n) {
    Rat s(0);
    for (int k = 1; k <= n; ++k)
      s += Rat(k) * c[static_cast<size_t>(k)] * a[static_cast<size_t>(n - k)];
    a[static_cast<size_t>(n)] = s / Rat(n);
  }
  return a;
}

// Evaluate a TPoly at concrete rational times (t_1, t_3, t_5, ...).
Rat eval_tpoly(const TPoly& f, const std::vector<Rat>& odd_times) {
  Rat total(0);
  for (const auto& [m, c] : f.terms()) {
    Rat term = c.coeff(0, 0);
    for (size_t i = 0; i < m.size(); ++i)
      for (int rep = 0; rep < m[i]; ++rep) term *= odd_times[i];
    total += term;
  }
  return total;
}

StrictPartition sp(std::vector<long> parts) {
  StrictPartition mu;
  mu.parts = std::move(parts);
  return mu;
}

}  // namespace

TEST_CASE("one-row polynomials, small closed forms") {
  CHECK(q_onerow(0, 8).coeff(mono({})) == Scalar::constant(Rat(1)));
  CHECK(q_onerow(1, 8).coeff(mono({1})) == Scalar::constant(Rat(1)));
  CHECK(q_onerow(2, 8).coeff(mono({2})) == Scalar::constant(Rat(1, 2)));
  TPoly q3 = q_onerow(3, 8);
  CHECK(q3.coeff(mono({3})) == Scalar::constant(Rat(1, 6)));
  CHECK(q3.coeff(mono({0, 1})) == Scalar::constant(Rat(1)));
  CHECK(q3.terms().size() == 2);
  // Weight cutoff below n empties the polynomial.
  CHECK(q_onerow(5, 4).is_zero());
}

TEST_CASE("one-row polynomials match the exponential generating function") {
  // exp(sum_{k odd} t_k x^k) at concrete rational times.
  std::vector<Rat> times = {Rat(2, 3), Rat(-1, 2), Rat(1, 5), Rat(1, 7)};
  std::vector<Rat> c(9, Rat(0));
  c[1] = times[0];
  c[3] = times[1];
  c[5] = times[2];
  c[7] = times[3];
  auto a = series_exp(c, 8);
  for (long n = 0; n <= 8; ++n)
    CHECK(eval_tpoly(q_onerow(n, 8), times) == a[static_cast<size_t>(n)]);
}

TEST_CASE("two-row values are antisymmetric and degenerate to one-row") {
  auto q = [](long k) { return q_onerow(k, 12); };
  for (long n = 1; n < 6; ++n)
    for (long m = n + 1; m <= 6; ++m) {
      TPoly qmn = schurq_tworow<TPoly>(m, n, q);
      TPoly qnm = schurq_tworow<TPoly>(n, m, q);
      CHECK(qmn == -qnm);
    }
  for (long m = 1; m <= 6; ++m) {
    CHECK(schurq_tworow<TPoly>(m, 0, q) == q_onerow(m, 12));
    CHECK(schurq_tworow<TPoly>(m, m, q).is_zero());
  }
}

TEST_CASE("strict-partition polynomials") {
  TPoly q21 = q_strict(sp({2, 1}), 8);
  CHECK(q21.coeff(mono({3})) == Scalar::constant(Rat(1, 6)));
  CHECK(q21.coeff(mono({0, 1})) == Scalar::constant(Rat(-2)));
  CHECK(q21.terms().size() == 2);
  CHECK(q_strict(sp({}), 8).coeff(mono({})) == Scalar::constant(Rat(1)));
  CHECK(q_strict(sp({4}), 8) == q_onerow(4, 8));
  // Odd length goes through the padded Pfaffian: expanding along the last
  // column writes Q_(3,2,1) in terms of two-row and one-row values.
  auto q = [](long k) { return q_onerow(k, 8); };
  TPoly expect = schurq_tworow<TPoly>(3, 2, q) * q_onerow(1, 8) +
                 -schurq_tworow<TPoly>(3, 1, q) * q_onerow(2, 8) +
                 schurq_tworow<TPoly>(2, 1, q) * q_onerow(3, 8);
  CHECK(q_strict(sp({3, 2, 1}), 8) == expect);
}

TEST_CASE("delta specialization: t = (p, 0, 0, ...)") {
  CHECK(specialize_delta(sp({})) == Scalar::constant(Rat(1)));
  CHECK(specialize_delta(sp({3})) == Scalar::monomial(3, 0, Rat(1, 6)));
  CHECK(specialize_delta(sp({2, 1})) == Scalar::monomial(3, 0, Rat(1, 6)));
  // Property: substituting t_1 -> p, t_{k>=3} -> 0 into Q_mu reproduces the
  // closed form, for every strict partition of weight <= 8.
  for (long w = 1; w <= 8; ++w) {
    for (const auto& mu : strict_partitions(w)) {
      TPoly q = q_strict(mu, static_cast<int>(w));
      Scalar via_subst;
      for (const auto& [m, c] : q.terms()) {
        if (m.size() > 1) continue;  // any t_3, t_5, ... factor dies
        int a = m.empty() ? 0 : m[0];
        via_subst += Scalar::p_pow(a) * c;
      }
      CHECK(via_subst == specialize_delta(mu));
    }
  }
}

TEST_CASE("principal specialization: t_k = -2/(k z^k)") {
  LaurentZ p3 = specialize_principal(sp({3}), 10);
  CHECK(p3.at(-3) == Scalar::constant(Rat(-2)));
  CHECK(p3.zero_on(-10, -4));
  CHECK(p3.zero_on(-2, 0));
  LaurentZ p4 = specialize_principal(sp({4}), 10);
  CHECK(p4.at(-4) == Scalar::constant(Rat(2)));
  // Every length-2 value collapses to zero under this substitution.
  for (long n = 1; n < 4; ++n)
    for (long m = n + 1; m <= 5; ++m)
      CHECK(specialize_principal(sp({m, n}), 12).zero_on(-12, 0));
  // Property: term-by-term substitution into Q_mu agrees, |mu| <= 8.
  for (long w = 1; w <= 8; ++w) {
    for (const auto& mu : strict_partitions(w)) {
      TPoly q = q_strict(mu, static_cast<int>(w));
      LaurentZ direct(-w, 0, true);
      for (const auto& [m, c] : q.terms()) {
        Rat factor(1);
        long deg = 0;
        for (size_t i = 0; i < m.size(); ++i) {
          long k = 2 * static_cast<long>(i) + 1;
          for (int rep = 0; rep < m[i]; ++rep) {
            factor *= Rat(-2, k);
            deg -= k;
          }
        }
        if (m.empty()) deg = 0;
        direct.add_at(deg, Scalar::constant(factor * c.coeff(0, 0)));
      }
      LaurentZ got = specialize_principal(mu, w);
      for (long d = -w; d <= 0; ++d) CHECK(got.at(d) == direct.at(d));
    }
  }
}
