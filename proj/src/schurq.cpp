#include "bkp/schurq.hpp"

#include <stdexcept>

namespace bkp {

TPoly q_onerow(long n, int W) {
  if (n < 0) throw std::invalid_argument("q_onerow: negative index");
  TPoly p(W);
  for (const auto& lam : odd_partitions(n)) {
    // Coefficient 1 / prod_k m_k! over the part multiplicities m_k.
    Rat c(1);
    TMono mono;
    long run = 1;
    for (size_t i = 0; i < lam.parts.size(); ++i) {
      size_t slot = static_cast<size_t>((lam.parts[i] - 1) / 2);
      if (mono.size() <= slot) mono.resize(slot + 1, 0);
      mono[slot] += 1;
      if (i + 1 < lam.parts.size() && lam.parts[i + 1] == lam.parts[i]) {
        ++run;
        c /= Rat(run);
      } else {
        run = 1;
      }
    }
    p.add_term(std::move(mono), Scalar::constant(c));
  }
  return p;
}

TPoly q_strict(const StrictPartition& mu, int W) {
  auto q = [W](long n) { return q_onerow(n, W); };
  return schurq_pfaffian(mu, q, TPoly::one(W));
}

Scalar specialize_delta(const StrictPartition& mu) {
  Rat c(1);
  const auto& parts = mu.parts;
  for (size_t i = 0; i < parts.size(); ++i) {
    c /= rat_factorial(parts[i]);
    for (size_t j = i + 1; j < parts.size(); ++j)
      c *= Rat(parts[i] - parts[j], parts[i] + parts[j]);
  }
  return Scalar::monomial(static_cast<int>(mu.weight()), 0, c);
}

LaurentZ specialize_principal(const StrictPartition& mu, long I) {
  if (I < 0) throw std::invalid_argument("specialize_principal: negative depth");
  // One-row values under t_k -> -2/(k z^k): q_0 = 1, q_n = 2 (-1)^n z^{-n}.
  auto q = [](long n) {
    if (n == 0) return LaurentZ::monomial(0, Scalar::constant(Rat(1)));
    return LaurentZ::monomial(-n, Scalar::constant(Rat(n % 2 == 0 ? 2 : -2)));
  };
  LaurentZ exact =
      schurq_pfaffian(mu, q, LaurentZ::monomial(0, Scalar::constant(Rat(1))));
  // Report on [-I, 0]; anything below -I falls off the trusted window.
  LaurentZ out(-I, 0, exact.tail_exact() && exact.lo() >= -I);
  for (long d = std::max(-I, exact.lo()); d <= 0; ++d)
    if (d <= exact.hi()) out.set(d, exact.at(d));
  return out;
}

}  // namespace bkp
