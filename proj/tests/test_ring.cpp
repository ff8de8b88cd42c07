#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <stdexcept>
#include <vector>

#include "bkp/laurent.hpp"
#include "bkp/multilaurent.hpp"
#include "bkp/pfaffian.hpp"
#include "bkp/rat.hpp"
#include "bkp/scalar.hpp"
#include "bkp/serialize.hpp"
#include "doctest.h"
#include "matrix_testutil.hpp"

using namespace bkp;

namespace {

std::mt19937 rng(20240817);

Rat random_rat() {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  return Rat(num(rng), den(rng));
}

Scalar random_scalar(int B) {
  Scalar s;
  std::uniform_int_distribution<int> p(-2, 2);
  for (int b = 0; b <= B; ++b) s += Scalar::monomial(p(rng), b, random_rat());
  return s.truncated(B);
}

}  // namespace

TEST_CASE("Rat arithmetic and normalization") {
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(Rat(1, -2) == Rat(-1, 2));
  CHECK((Rat(1, 3) + Rat(1, 6)) == Rat(1, 2));
  CHECK((Rat(2, 3) * Rat(3, 4)) == Rat(1, 2));
  CHECK((Rat(1, 2) - Rat(1, 2)) == Rat(0));
  CHECK(Rat(3, 7).inverse() == Rat(7, 3));
  CHECK(Rat(-2).pow(3) == Rat(-8));
  CHECK(Rat::from_string("-22/7") == Rat(-22, 7));
  CHECK(Rat(5, 10).to_string() == "1/2");
  CHECK(Rat(-4, 2).to_string() == "-2");
  CHECK(rat_factorial(6) == Rat(720));
  CHECK(int_pow(-2, 3) == Rat(-8));
  CHECK_THROWS_AS(Rat(1, 0), std::invalid_argument);
}

TEST_CASE("Scalar truncation order propagates as the minimum") {
  Scalar exact = Scalar::monomial(1, 2, Rat(5));
  CHECK(exact.beta_order() == Scalar::kBetaExact);
  Scalar trunc = exact.truncated(3);
  CHECK(trunc.beta_order() == 3);
  CHECK((exact * trunc).beta_order() == 3);
  CHECK((exact + trunc).beta_order() == 3);
  // beta^4 content dies against order 3.
  Scalar high = Scalar::beta_pow(4);
  CHECK((high * trunc).is_zero());
  // Equality compares the common truncation.
  Scalar a = exp_beta(Rat(1), 5);
  Scalar b = exp_beta(Rat(1), 3);
  CHECK(a == b);
  CHECK(a.truncated(3) == a.truncated(5).truncated(3));
}

TEST_CASE("Scalar distributivity on random values") {
  for (int trial = 0; trial < 30; ++trial) {
    Scalar a = random_scalar(4);
    Scalar b = random_scalar(4);
    Scalar c = random_scalar(4);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
  }
}

TEST_CASE("exp_beta is additive in the exponent") {
  for (int trial = 0; trial < 10; ++trial) {
    Rat x = random_rat();
    Rat y = random_rat();
    CHECK(exp_beta(x, 5) * exp_beta(y, 5) == exp_beta(x + y, 5));
  }
  CHECK(exp_beta(Rat(0), 4) == Scalar::constant(Rat(1)));
}

TEST_CASE("f_exp examples") {
  CHECK(f_exp(0, 2, 4) == Scalar::constant(Rat(1)));
  Scalar e = f_exp(1, 2, 2);
  CHECK(e.coeff(0, 0) == Rat(1));
  CHECK(e.coeff(0, 1) == Rat(1, 3));
  CHECK(e.coeff(0, 2) == Rat(1, 18));
  for (long k = 1; k <= 6; ++k)
    CHECK(f_exp(-k, 2, 4) * f_exp(k, 2, 4) == Scalar::constant(Rat(1)));
  CHECK(f_exp(2, 4, 1).coeff(0, 1) == Rat(32, 5));  // 2^5/5
  CHECK_THROWS_AS(f_exp(1, 3, 2), std::invalid_argument);
}

TEST_CASE("pfaffian closed forms") {
  SUBCASE("2x2") {
    AntisymMatrix m(2);
    m.set(0, 1, Scalar::p_pow(1));
    CHECK(pfaffian(m) == Scalar::p_pow(1));
  }
  SUBCASE("4x4 symbolic") {
    // Distinct powers of p keep every product distinguishable:
    // a12 a34 - a13 a24 + a14 a23.
    AntisymMatrix m(4);
    int e[4][4] = {};
    int pw = 1;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) {
        e[i][j] = pw;
        m.set(i, j, Scalar::p_pow(pw));
        pw *= 3;
      }
    Scalar expect = Scalar::p_pow(e[0][1] + e[2][3]) -
                    Scalar::p_pow(e[0][2] + e[1][3]) +
                    Scalar::p_pow(e[0][3] + e[1][2]);
    CHECK(pfaffian(m) == expect);
  }
  SUBCASE("dim 0 is the empty product") {
    AntisymMatrix m(0);
    CHECK(pfaffian(m) == Scalar::constant(Rat(1)));
  }
  SUBCASE("odd dimension is refused") {
    std::vector<std::vector<Scalar>> m(
        3, std::vector<Scalar>(3, Scalar()));
    CHECK_THROWS_WITH_AS(pfaffian_expand(m, Scalar::constant(Rat(1))),
                         "pfaffian requires even dimension",
                         std::invalid_argument);
  }
}

TEST_CASE("pfaffian squared equals the determinant") {
  for (int dim = 2; dim <= 8; dim += 2) {
    for (int trial = 0; trial < 5; ++trial) {
      AntisymMatrix m(static_cast<size_t>(dim));
      std::vector<std::vector<Rat>> d(
          static_cast<size_t>(dim),
          std::vector<Rat>(static_cast<size_t>(dim), Rat(0)));
      for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j) {
          Rat v = random_rat();
          m.set(static_cast<size_t>(i), static_cast<size_t>(j),
                Scalar::constant(v));
          d[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
          d[static_cast<size_t>(j)][static_cast<size_t>(i)] = -v;
        }
      Scalar pf = pfaffian(m);
      CHECK(pf * pf == Scalar::constant(testutil::determinant(d)));
    }
  }
}

TEST_CASE("AntisymMatrix stores a signed upper triangle") {
  AntisymMatrix m(2);
  m.set(0, 1, Scalar::constant(Rat(7)));
  CHECK(m.get(0, 1) == Scalar::constant(Rat(7)));
  CHECK(m.get(1, 0) == Scalar::constant(Rat(-7)));
  CHECK(m.get(0, 0).is_zero());
}

TEST_CASE("LaurentZ window semantics") {
  SUBCASE("exact polynomial product") {
    LaurentZ zp1 = LaurentZ::monomial(1, Scalar::constant(Rat(1))) +
                   LaurentZ::monomial(0, Scalar::constant(Rat(1)));
    LaurentZ zm1 = LaurentZ::monomial(1, Scalar::constant(Rat(1))) +
                   LaurentZ::monomial(0, Scalar::constant(Rat(-1)));
    LaurentZ prod = zp1 * zm1;
    CHECK(prod.tail_exact());
    CHECK(prod.at(2) == Scalar::constant(Rat(1)));
    CHECK(prod.at(0) == Scalar::constant(Rat(-1)));
    CHECK(prod.at(1).is_zero());
    CHECK(prod.at(-100).is_zero());
  }
  SUBCASE("monomial multiplication shifts the window") {
    LaurentZ s(-3, 2, false);
    s.set(0, Scalar::constant(Rat(5)));
    LaurentZ shifted = s * LaurentZ::monomial(-2, Scalar::constant(Rat(1)));
    CHECK(shifted.lo() == -5);
    CHECK(shifted.hi() == 0);
    CHECK(shifted.at(-2) == Scalar::constant(Rat(5)));
    CHECK_FALSE(shifted.tail_exact());
  }
  SUBCASE("telescoping against a geometric tail") {
    LaurentZ geo(-10, 0, false);
    for (long d = -10; d <= 0; ++d) geo.set(d, Scalar::constant(Rat(1)));
    LaurentZ fin = LaurentZ::monomial(0, Scalar::constant(Rat(1))) +
                   LaurentZ::monomial(-1, Scalar::constant(Rat(-1)));
    LaurentZ prod = geo * fin;
    CHECK(prod.hi() == 0);
    CHECK(prod.lo() == -10);
    CHECK(prod.at(0) == Scalar::constant(Rat(1)));
    for (long d = -9; d <= -1; ++d) CHECK(prod.at(d).is_zero());
    CHECK(prod.zero_on(-9, -1));
    CHECK_THROWS_AS(prod.at(-11), std::out_of_range);
  }
  SUBCASE("untrusted reads throw, hard top reads answer zero") {
    LaurentZ s(-2, 3, false);
    CHECK(s.at(10).is_zero());
    CHECK(s.trusted(4));
    CHECK_FALSE(s.trusted(-3));
    CHECK_THROWS_AS(s.at(-3), std::out_of_range);
  }
  SUBCASE("derivative narrows the window by one") {
    LaurentZ s(-2, 2, false);
    s.set(2, Scalar::constant(Rat(3)));
    s.set(-2, Scalar::constant(Rat(5)));
    LaurentZ d = s.derivative();
    CHECK(d.lo() == -3);
    CHECK(d.hi() == 1);
    CHECK(d.at(1) == Scalar::constant(Rat(6)));
    CHECK(d.at(-3) == Scalar::constant(Rat(-10)));
  }
}

TEST_CASE("Laurent window honesty on random series") {
  // Build exact references, hand the product clipped views, and check every
  // coefficient inside the declared result window against the exact product.
  std::uniform_int_distribution<long> lo_d(-6, -2), hi_d(0, 4);
  for (int trial = 0; trial < 40; ++trial) {
    LaurentZ ea(-8, 5, true), eb(-8, 5, true);
    for (long d = -8; d <= 5; ++d) {
      ea.set(d, Scalar::constant(random_rat()));
      eb.set(d, Scalar::constant(random_rat()));
    }
    bool xa = trial % 2 == 0, xb = trial % 3 == 0;
    long la = xa ? -8 : lo_d(rng), ha = hi_d(rng);
    long lb = xb ? -8 : lo_d(rng), hb = hi_d(rng);
    LaurentZ va(la, ha, xa), vb(lb, hb, xb);
    for (long d = la; d <= ha; ++d) va.set(d, ea.at(d));
    for (long d = lb; d <= hb; ++d) vb.set(d, eb.at(d));
    // The views' hard tops chop the references too.
    LaurentZ ta = ea.clipped(-8, ha), tb = eb.clipped(-8, hb);
    LaurentZ truth = ta * tb;
    LaurentZ got = va * vb;
    for (long d = got.lo(); d <= got.hi(); ++d) CHECK(got.at(d) == truth.at(d));
    LaurentZ sum = va + vb;
    LaurentZ tsum = ta + tb;
    for (long d = sum.lo(); d <= sum.hi(); ++d) CHECK(sum.at(d) == tsum.at(d));
  }
}

TEST_CASE("MultiLaurent keeps exponents within the bound") {
  MultiLaurent m(2, 3);
  m.add_term({-4, 0}, Scalar::constant(Rat(1)));
  CHECK(m.terms().empty());
  m.add_term({-3, 2}, Scalar::constant(Rat(2)));
  CHECK(m.coeff({-3, 2}) == Scalar::constant(Rat(2)));
  MultiLaurent a(1, 4), b(1, 4);
  a.add_term({-3}, Scalar::constant(Rat(1)));
  b.add_term({-2}, Scalar::constant(Rat(1)));
  CHECK((a * b).terms().empty());  // -5 exceeds the bound
  b.add_term({1}, Scalar::constant(Rat(4)));
  CHECK((a * b).coeff({-2}) == Scalar::constant(Rat(4)));
}

TEST_CASE("MultiLaurent embedding applies slot signs") {
  MultiLaurent pair(2, 4);
  pair.add_term({-1, 2}, Scalar::constant(Rat(3)));
  MultiLaurent wide = pair.embedded(3, {2, 0}, {-1, 1});
  // slot 0 of the pair lands in variable 2 with sign (-1)^{-1} = -1.
  CHECK(wide.coeff({2, 0, -1}) == Scalar::constant(Rat(-3)));
  MultiLaurent odd = wide.odd_part();
  CHECK(odd.terms().empty());  // middle exponent 0 is even
}

TEST_CASE("Scalar JSON schema") {
  Scalar s = Scalar::monomial(2, 1, Rat(-1, 6)).truncated(3);
  json j = scalar_to_json(s, 7);
  CHECK(j["beta_order"] == 3);
  CHECK(j["terms"].size() == 1);
  CHECK(j["terms"][0]["p"] == 2);
  CHECK(j["terms"][0]["beta"] == 1);
  CHECK(j["terms"][0]["num"] == "-1");
  CHECK(j["terms"][0]["den"] == "6");
  // Exact scalars fall back to the caller's order.
  json je = scalar_to_json(Scalar::p_pow(1), 7);
  CHECK(je["beta_order"] == 7);
}
