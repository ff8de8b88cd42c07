#include "bkp/kacschwarz.hpp"

#include <sstream>
#include <stdexcept>

namespace bkp {

Scalar DiagOperator::multiplier(long k) const {
  return f_exp(k + l, r, beta_order) * f_exp(-k, r, beta_order);
}

LaurentZ DiagOperator::apply(const LaurentZ& s) const {
  LaurentZ out(s.lo(), s.hi(), s.tail_exact());
  for (long d = s.lo(); d <= s.hi(); ++d) out.set(d, s.at(d) * multiplier(d));
  return out;
}

LaurentOperator LaurentOperator::pipeline(Pipeline p) {
  LaurentOperator op;
  op.pipelines_.push_back(std::move(p));
  return op;
}

LaurentOperator& LaurentOperator::operator+=(const LaurentOperator& o) {
  for (const auto& p : o.pipelines_) pipelines_.push_back(p);
  return *this;
}

LaurentOperator LaurentOperator::P(int r, int B) {
  LaurentOperator op = pipeline({DiagOperator{1, r, B}, Deriv{}});
  op += pipeline({Scale{-Scalar::p_pow(1)}, DiagOperator{2, r, B}, ZPow{-2}});
  return op;
}

LaurentOperator LaurentOperator::Q(int r, int B) {
  return pipeline({DiagOperator{-1, r, B}, ZPow{1}});
}

LaurentOperator LaurentOperator::E(int l, int r, int B) {
  return pipeline({DiagOperator{l, r, B}});
}

LaurentZ LaurentOperator::apply(const LaurentZ& s) const {
  if (pipelines_.empty())
    throw std::logic_error("LaurentOperator: empty operator");
  bool first = true;
  LaurentZ acc = s;  // placeholder, replaced on first pipeline
  for (const auto& p : pipelines_) {
    LaurentZ cur = s;
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
      if (const auto* diag = std::get_if<DiagOperator>(&*it)) {
        cur = diag->apply(cur);
      } else if (std::get_if<Deriv>(&*it)) {
        cur = cur.derivative();
      } else if (const auto* zp = std::get_if<ZPow>(&*it)) {
        cur = cur.shifted(zp->m);
      } else {
        cur = cur.scaled(std::get<Scale>(*it).c);
      }
    }
    if (first) {
      acc = cur;
      first = false;
    } else {
      acc = add_laurent(acc, cur);
    }
  }
  return acc;
}

LaurentZ apply_E(int l, const LaurentZ& s, int r, int B) {
  return LaurentOperator::E(l, r, B).apply(s);
}

LaurentZ apply_P(const LaurentZ& s, int r, int B) {
  return LaurentOperator::P(r, B).apply(s);
}

LaurentZ apply_Q(const LaurentZ& s, int r, int B) {
  return LaurentOperator::Q(r, B).apply(s);
}

namespace {

std::string range_str(const std::string& name, long from, long to) {
  std::ostringstream os;
  os << name << " on [" << from << ", " << to << "]";
  return os.str();
}

// Compares trusted coefficients on [from, to]; records the first mismatch.
bool check_equal(const LaurentZ& lhs, const LaurentZ& rhs, long from, long to,
                 const std::string& what, KSReport& report) {
  for (long d = from; d <= to; ++d) {
    if (lhs.at(d) == rhs.at(d)) continue;
    if (report.pass) {
      std::ostringstream os;
      os << what << " at degree " << d << ": lhs = " << lhs.at(d).to_string()
         << ", rhs = " << rhs.at(d).to_string();
      report.first_failure = os.str();
      report.pass = false;
    }
    return false;
  }
  return true;
}

}  // namespace

KSReport verify_theorem(const AffineProvider& ap, long kmax, long I) {
  if (kmax < 0) throw std::invalid_argument("verify_theorem: kmax must be >= 0");
  if (I < kmax + 4)
    throw std::invalid_argument(
        "verify_theorem: insufficient window (need depth >= kmax + 4)");
  const int r = ap.r;
  const int B = ap.beta_order;
  KSReport report;
  report.r = r;
  report.beta_order = B;
  report.kmax = kmax;
  report.depth = I;

  // Basis at internal depth I+2: the derivative leg of P loses one degree at
  // the bottom, and the stated check windows must stay honestly known.
  const long Ib = I + 2;
  std::vector<LaurentZ> phi;
  for (long k = 0; k <= kmax + 1; ++k) phi.push_back(phi_basis(ap, k, Ib));

  LaurentOperator P = LaurentOperator::P(r, B);
  LaurentOperator Q = LaurentOperator::Q(r, B);

  // (a) P(phi_0) = 0 on [-I+2, 0].
  {
    LaurentZ lhs = P.apply(phi[0]);
    LaurentZ zero = LaurentZ::monomial(0, Scalar());
    check_equal(lhs, zero, -I + 2, 0, "P(phi_0)", report);
    report.checked_ranges.push_back(range_str("P(phi_0) = 0", -I + 2, 0));
  }

  // (b) P-recursion on [-I+2, k-1].
  for (long k = 1; k <= kmax; ++k) {
    LaurentZ lhs = P.apply(phi[static_cast<size_t>(k)]);
    Scalar m1 = f_exp(k, r, B) * f_exp(-(k - 1), r, B);
    m1.scale(Rat(k));
    LaurentZ rhs = phi[static_cast<size_t>(k - 1)].scaled(m1);
    if (k >= 2) {
      Scalar m2 = Scalar::p_pow(1) * f_exp(k, r, B) * f_exp(-(k - 2), r, B);
      rhs = sub_laurent(rhs, phi[static_cast<size_t>(k - 2)].scaled(m2));
    }
    std::ostringstream what;
    what << "P(phi_" << k << ") recursion";
    check_equal(lhs, rhs, -I + 2, k - 1, what.str(), report);
  }
  if (kmax >= 1)
    report.checked_ranges.push_back(
        "P-recursion k=1.." + std::to_string(kmax) + " on [-I+2, k-1]");

  // (c) Q-recursion on [-I, k+1].
  for (long k = 0; k <= kmax; ++k) {
    LaurentZ lhs = Q.apply(phi[static_cast<size_t>(k)]);
    Scalar m1 = f_exp(k, r, B) * f_exp(-(k + 1), r, B);
    LaurentZ rhs = phi[static_cast<size_t>(k + 1)].scaled(m1);
    Scalar m0 = Scalar::p_pow(static_cast<int>(k + 1)) * f_exp(k, r, B);
    m0.scale(Rat(1) / rat_factorial(k + 1));
    rhs = sub_laurent(rhs, phi[0].scaled(m0));
    std::ostringstream what;
    what << "Q(phi_" << k << ") recursion";
    check_equal(lhs, rhs, -I, k + 1, what.str(), report);
  }
  report.checked_ranges.push_back(
      "Q-recursion k=0.." + std::to_string(kmax) + " on [-I, k+1]");

  // (d) (PQ - QP)(z^k) = z^k on exact monomials.
  for (long k = -kmax; k <= kmax; ++k) {
    LaurentZ mono = LaurentZ::monomial(k, Scalar::constant(Rat(1)));
    LaurentZ diff = sub_laurent(P.apply(Q.apply(mono)), Q.apply(P.apply(mono)));
    std::ostringstream what;
    what << "commutator on z^" << k;
    check_equal(diff, mono, k - 3, k + 1, what.str(), report);
  }
  report.checked_ranges.push_back(
      "commutator on z^k, |k| <= " + std::to_string(kmax));

  return report;
}

}  // namespace bkp
