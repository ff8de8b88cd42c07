#include "bkp/npoint.hpp"

#include <algorithm>
#include <stdexcept>

namespace bkp {

std::vector<std::vector<int>> cycle_permutations(int n) {
  if (n < 1) throw std::invalid_argument("cycle_permutations: n must be >= 1");
  std::vector<int> rest;
  for (int i = 2; i <= n; ++i) rest.push_back(i);
  std::vector<std::vector<int>> out;
  do {
    std::vector<int> cyc;
    cyc.reserve(static_cast<size_t>(n));
    cyc.push_back(1);
    cyc.insert(cyc.end(), rest.begin(), rest.end());
    out.push_back(std::move(cyc));
  } while (std::next_permutation(rest.begin(), rest.end()));
  return out;
}

MultiLaurent series_A(const AffineProvider& ap, int D) {
  MultiLaurent s(2, D);
  for (int n = 1; n <= D; ++n) {
    for (int m = 1; m <= D; ++m) {
      Scalar c = ap.a(n, m);
      if ((n + m) % 2 == 0) c = -c;  // (-1)^{m+n+1}
      s.add_term({-n, -m}, c);
    }
    Scalar c = ap.a(n, 0);
    c.scale(Rat(n % 2 == 0 ? -1 : 1, 2));  // -1/2 (-1)^n
    s.add_term({-n, 0}, c);
    s.add_term({0, -n}, -c);
  }
  return s;
}

MultiLaurent series_Ahat(const AffineProvider& ap, int D) {
  MultiLaurent s = series_A(ap, D);
  s.add_term({0, 0}, Scalar::constant(Rat(-1, 4)));
  for (int i = 1; i <= D; ++i)
    s.add_term({-i, i}, Scalar::constant(Rat(i % 2 == 0 ? -1 : 1, 2)));
  return s;
}

MultiLaurent series_A_diag(const AffineProvider& ap, int D) {
  // Collapse w -> -z: a 2-variable term (e0, e1) lands at degree e0 + e1
  // weighted by (-1)^{e0}.
  MultiLaurent a = series_A(ap, D);
  MultiLaurent s(1, 2 * D);
  for (const auto& [e, c] : a.terms()) {
    Scalar v = c;
    if (e[0] % 2 != 0) v = -v;
    s.add_term({e[0] + e[1]}, v);
  }
  return s;
}

namespace {

// One xi factor embedded into n variables: the pair series evaluated at
// (eps_a z_a, -eps_b z_b) for cycle neighbors a -> b, with the order of the
// arguments (and an overall sign) flipped when a > b so that the first slot
// always carries the smaller variable index.
MultiLaurent xi_factor(const MultiLaurent& ahat, int n, int a, int b, int eps_a,
                       int eps_b) {
  bool flip = a > b;
  int first = flip ? b : a;
  int second = flip ? a : b;
  int sign_first = flip ? -eps_b : eps_a;
  int sign_second = flip ? eps_a : -eps_b;
  MultiLaurent m =
      ahat.embedded(n, {first - 1, second - 1}, {sign_first, sign_second});
  return flip ? -m : m;
}

MultiLaurent correction_n2(int D) {
  MultiLaurent c(2, D);
  for (int k = 1; k <= D; k += 2)
    c.add_term({-k, k}, Scalar::constant(Rat(k, 2)));
  return c;
}

MultiLaurent cycle_sum(const MultiLaurent& ahat, int n, int D,
                       const std::vector<int>& eps) {
  MultiLaurent total(n, D);
  for (const auto& cyc : cycle_permutations(n)) {
    MultiLaurent prod = MultiLaurent::constant(n, D, Scalar::constant(Rat(1)));
    for (int i = 0; i < n; ++i) {
      int a = cyc[static_cast<size_t>(i)];
      int b = cyc[static_cast<size_t>((i + 1) % n)];
      prod = prod * xi_factor(ahat, n, a, b, eps[static_cast<size_t>(a - 1)],
                              eps[static_cast<size_t>(b - 1)]);
    }
    total += prod;
  }
  return total;
}

// One xi factor for the walk cur -> nxt (all eps = 1), flattened to
// (exponent of z_cur, exponent of z_nxt, coefficient) triples. Matches
// xi_factor with eps = 1: the pair series argument order is canonical in the
// variable indices, so the walk direction decides which slot is which.
struct PairTerm {
  int e_cur;
  int e_nxt;
  Scalar c;
};

std::vector<PairTerm> xi_walk_terms(const MultiLaurent& ahat, int cur,
                                    int nxt) {
  std::vector<PairTerm> out;
  out.reserve(ahat.terms().size());
  for (const auto& [e, c] : ahat.terms()) {
    PairTerm t{0, 0, c};
    if (cur < nxt) {
      t.e_cur = e[0];
      t.e_nxt = e[1];
      if (e[1] % 2 != 0) t.c = -t.c;
    } else {
      t.e_cur = e[1];
      t.e_nxt = e[0];
      if (e[0] % 2 == 0) t.c = -t.c;
    }
    out.push_back(std::move(t));
  }
  return out;
}

// Coefficient of prod_i z_i^{-mu_i} in the all-eps-1 cycle sum, computed with
// on-the-fly pinning: once both factors touching a variable are absorbed its
// exponent is final and off-target terms die, so the intermediate state lives
// on the two open variables only. Agrees with extracting the coefficient from
// cycle_sum; n up to the partition length stays tractable because each step
// is a sparse transfer, not a full n-variable product.
Scalar pinned_cycle_coeff(const MultiLaurent& ahat,
                          const std::vector<long>& mu) {
  int n = static_cast<int>(mu.size());
  Scalar total;
  for (const auto& cyc : cycle_permutations(n)) {
    // state: (exponent of z_{cyc[0]} so far, exponent of the open variable)
    std::map<std::pair<int, int>, Scalar> state;
    for (const auto& t :
         xi_walk_terms(ahat, cyc[0], cyc[1]))
      state[{t.e_cur, t.e_nxt}] += t.c;
    for (int i = 1; i < n && !state.empty(); ++i) {
      int cur = cyc[static_cast<size_t>(i)];
      int nxt = cyc[static_cast<size_t>((i + 1) % n)];
      int pin = static_cast<int>(-mu[static_cast<size_t>(cur - 1)]);
      auto terms = xi_walk_terms(ahat, cur, nxt);
      std::map<std::pair<int, int>, Scalar> next;
      for (const auto& [key, sc] : state) {
        for (const auto& t : terms) {
          if (key.second + t.e_cur != pin) continue;
          if (i + 1 < n) {
            next[{key.first, t.e_nxt}] += sc * t.c;
          } else if (key.first + t.e_nxt ==
                     static_cast<int>(-mu[0])) {
            total += sc * t.c;
          }
        }
      }
      state = std::move(next);
    }
  }
  return total;
}

}  // namespace

MultiLaurent connected_npoint(const AffineProvider& ap, int n, int D,
                              NPointVariant variant, bool allow_large) {
  if (n < 1) throw std::invalid_argument("connected_npoint: n must be >= 1");
  if (n > 5 && !allow_large)
    throw std::invalid_argument(
        "connected_npoint: n > 5 needs allow_large ((n-1)! cycle terms)");
  if (n == 1) return series_A_diag(ap, D);

  MultiLaurent ahat = series_Ahat(ap, D);
  MultiLaurent total(n, D);
  if (variant == NPointVariant::simplified) {
    std::vector<int> eps(static_cast<size_t>(n), 1);
    MultiLaurent sum = cycle_sum(ahat, n, D, eps).odd_part();
    Rat scale(-1);
    for (int i = 1; i < n; ++i) scale *= Rat(2);
    total += sum.scaled(Scalar::constant(scale));
  } else {
    // epsilon_1 = 1 fixed, the rest range over {+1,-1}; overall sign
    // -(eps_2 ... eps_n).
    std::vector<int> eps(static_cast<size_t>(n), 1);
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
      int prod_eps = 1;
      for (int i = 1; i < n; ++i) {
        eps[static_cast<size_t>(i)] = (mask >> (i - 1)) & 1u ? -1 : 1;
        prod_eps *= eps[static_cast<size_t>(i)];
      }
      MultiLaurent sum = cycle_sum(ahat, n, D, eps);
      total += sum.scaled(Scalar::constant(Rat(-prod_eps)));
    }
  }
  if (n == 2) total += -correction_n2(D);
  return total;
}

Scalar hurwitz_connected(const AffineProvider& ap, const OddPartition& mu,
                         int D) {
  if (mu.parts.empty())
    throw std::invalid_argument("hurwitz_connected: empty partition");
  for (long p : mu.parts)
    if (p > D)
      throw std::invalid_argument("hurwitz_connected: parts must be <= D");
  AffineProvider ap1 = substituted_p(ap, Rat(1));
  int n = static_cast<int>(mu.length());
  Scalar c;
  if (n == 1) {
    c = series_A_diag(ap1, D).coeff({static_cast<int>(-mu.parts[0])});
  } else {
    // Pinned extraction of the simplified variant; the all-negative target
    // never meets the n = 2 correction, whose z_2 exponents are positive.
    c = pinned_cycle_coeff(series_Ahat(ap1, D), mu.parts);
    Rat scale(-1);
    for (int i = 1; i < n; ++i) scale *= Rat(2);
    c.scale(scale);
  }
  c.scale(Rat(1) / sym_factor(mu));
  return c;
}

Scalar hurwitz_single(long n, int r, int B) {
  if (n <= 0 || n % 2 == 0)
    throw std::invalid_argument("hurwitz_single: n must be odd and positive");
  Scalar sum;
  for (long k = 0; k <= n; ++k) {
    Scalar term = f_exp(k, r, B) * f_exp(n - k, r, B);
    Rat c = Rat(2 * k - n) / (Rat(4 * n) * rat_factorial(k) * rat_factorial(n - k));
    if (k % 2 == 0) c = -c;  // (-1)^{k+1}
    term.scale(c);
    sum += term;
  }
  sum.scale(Rat(1, n));
  return sum;
}

}  // namespace bkp
