#pragma once

#include "bkp/laurent.hpp"
#include "bkp/partitions.hpp"
#include "bkp/pfaffian.hpp"
#include "bkp/tpoly.hpp"

namespace bkp {

// Coefficient q_n of the generating series sum_n q_n z^n = exp(sum_{k odd}
// t_k z^k): the sum over odd partitions lambda of n of prod_k t_k^{m_k}/m_k!.
// q_0 = 1; monomials above weight W are dropped (n > W gives the zero
// polynomial, every monomial of q_n having weight exactly n).
TPoly q_onerow(long n, int W);

// Two-row combination over any commutative ring, m > n >= 0:
//   Q(m,n) = q(m) q(n) + 2 sum_{i=1..n} (-1)^i q(m+i) q(n-i).
// For n = 0 this degenerates to q(m), matching the padding convention.
template <class Ring, class OneRow>
Ring schurq_tworow(long m, long n, OneRow q) {
  Ring acc = q(m) * q(n);
  for (long i = 1; i <= n; ++i) {
    Ring term = q(m + i) * q(n - i);
    term = term + term;
    acc += (i % 2 == 1) ? -term : term;
  }
  return acc;
}

// Q-function of a strict partition over any commutative ring, given the
// one-row values: Pfaffian of the matrix of two-row values, with a final
// row/column of one-row values appended when the length is odd.
template <class Ring, class OneRow>
Ring schurq_pfaffian(const StrictPartition& mu, OneRow q, const Ring& one) {
  size_t l = mu.length();
  if (l == 0) return one;
  if (l == 1) return q(mu.parts[0]);
  size_t n = l % 2 == 0 ? l : l + 1;
  Ring zero = one + -one;
  std::vector<std::vector<Ring>> m(n, std::vector<Ring>(n, zero));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      Ring v = j < l ? schurq_tworow<Ring>(mu.parts[i], mu.parts[j], q)
                     : q(mu.parts[i]);
      m[j][i] = -v;
      m[i][j] = std::move(v);
    }
  }
  return pfaffian_expand(m, one);
}

// Q_mu(t/2) as a polynomial in the odd times, truncated at weight W.
TPoly q_strict(const StrictPartition& mu, int W);

// Q_mu(t/2) at t = (p, 0, 0, ...): closed form
//   p^|mu| / prod_i mu_i! * prod_{i<j} (mu_i - mu_j)/(mu_i + mu_j).
Scalar specialize_delta(const StrictPartition& mu);

// Q_mu(t/2) under t_k -> -2/(k z^k): homogeneous, a single monomial in
// z^{-|mu|}. Returned on the trusted window [-I, 0] (a monomial falling below
// -I leaves the window empty-but-honest: the tail is marked unknown).
LaurentZ specialize_principal(const StrictPartition& mu, long I);

}  // namespace bkp
