#include "bkp/hirota.hpp"

#include <sstream>
#include <stdexcept>

#include "bkp/partitions.hpp"

namespace bkp {

std::map<long, TPoly> shift_tau(const AffineProvider& ap, int W, int sign,
                                long I) {
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("shift_tau: sign must be +1 or -1");
  if (I < 0) throw std::invalid_argument("shift_tau: negative depth");
  TPoly tau = tau_expand(ap, W + static_cast<int>(I));
  std::map<long, TPoly> out;
  for (long d = -I; d <= 0; ++d) out.emplace(d, TPoly(W));

  // Substitute t_k -> t_k + sign*2/(k z^k) monomial by monomial: each factor
  // t_k^e expands binomially, a chosen j of the e copies becoming
  // (sign*2/k)^j z^{-kj}.
  std::vector<std::pair<long, TPoly>> partial;  // (z-degree shed, t-part)
  for (const auto& [mono, c] : tau.terms()) {
    partial.clear();
    partial.emplace_back(0, TPoly::monomial({}, c, W));
    for (size_t slot = 0; slot < mono.size(); ++slot) {
      if (mono[slot] == 0) continue;
      long k = static_cast<long>(2 * slot + 1);
      int e = mono[slot];
      // Binomial expansion of (t_k + u)^e with u = sign*2/k z^{-k}.
      std::vector<Rat> upow(static_cast<size_t>(e) + 1, Rat(1));
      for (int j = 1; j <= e; ++j)
        upow[static_cast<size_t>(j)] =
            upow[static_cast<size_t>(j - 1)] * Rat(2 * sign, k);
      std::vector<std::pair<long, TPoly>> next;
      for (const auto& [shed, poly] : partial) {
        for (int j = 0; j <= e; ++j) {
          long shed2 = shed + k * j;
          if (shed2 > I) continue;
          Rat binom = Rat(1);
          for (int x = 0; x < j; ++x)
            binom *= Rat(e - x, x + 1);  // C(e, j) built incrementally
          TMono tm(slot + 1, 0);
          tm[slot] = e - j;
          TPoly factor = TPoly::monomial(
              std::move(tm), Scalar::constant(binom * upow[static_cast<size_t>(j)]),
              W);
          next.emplace_back(shed2, poly * factor);
        }
      }
      partial = std::move(next);
    }
    for (auto& [shed, poly] : partial) {
      auto it = out.find(-shed);
      if (it != out.end()) it->second += poly;
    }
  }
  return out;
}

namespace {

// z-degree d coefficient of e^{xi(t-s,z)} truncated at joint weight W:
// sum over odd partitions lambda of d of prod_k (t_k - s_k)^{m_k} / m_k!.
TSPoly xi_exp_coeff(long d, int W) {
  TSPoly out(W);
  if (d == 0) return TSPoly::one(W);
  for (const auto& lam : odd_partitions(d)) {
    TSPoly term = TSPoly::one(W);
    long run = 1;
    Rat norm(1);
    for (size_t i = 0; i < lam.parts.size(); ++i) {
      long k = lam.parts[i];
      // (t_k - s_k) as a TSPoly factor.
      TSPoly factor(W);
      TMono m(static_cast<size_t>((k - 1) / 2 + 1), 0);
      m.back() = 1;
      factor.add_term(m, {}, Scalar::constant(Rat(1)));
      factor.add_term({}, m, Scalar::constant(Rat(-1)));
      term = term * factor;
      if (i + 1 < lam.parts.size() && lam.parts[i + 1] == lam.parts[i]) {
        ++run;
        norm /= Rat(run);
      } else {
        run = 1;
      }
    }
    out += term.scaled(Scalar::constant(norm));
  }
  return out;
}

}  // namespace

HirotaReport hirota_check(const AffineProvider& ap, int W, int B, long I) {
  if (I < W)
    throw std::invalid_argument("hirota_check: insufficient I (need I >= W)");
  HirotaReport report;
  report.W = W;
  report.beta_order = B;
  report.depth = I;

  std::map<long, TPoly> minus = shift_tau(ap, W, -1, I);
  std::map<long, TPoly> plus = shift_tau(ap, W, +1, I);

  // Residue side: sum over z-degrees d1 + d2 + dxi = 0.
  TSPoly lhs(W);
  for (const auto& [d1, t_part] : minus) {
    if (t_part.is_zero()) continue;
    TSPoly tt = TSPoly::from_t(t_part, W);
    for (const auto& [d2, s_part] : plus) {
      long dxi = -(d1 + d2);
      if (dxi < 0 || dxi > W || s_part.is_zero()) continue;
      lhs += tt * TSPoly::from_s(s_part, W) * xi_exp_coeff(dxi, W);
    }
  }

  TPoly tau = tau_expand(ap, W);
  TSPoly rhs = TSPoly::from_t(tau, W) * TSPoly::from_s(tau, W);

  // Compare coefficientwise, beta order capped at B.
  TSPoly diff = lhs - rhs;
  for (const auto& [key, c] : diff.terms()) {
    if (c.truncated(B).is_zero()) continue;
    report.pass = false;
    std::ostringstream os;
    os << "mismatch at t-monomial " << tmono_to_string(key.first)
       << ", s-monomial " << tmono_to_string(key.second) << ": residual "
       << c.truncated(B).to_string();
    report.first_failure = os.str();
    break;
  }
  report.checked_monomials = static_cast<long>(rhs.terms().size());
  return report;
}

}  // namespace bkp
