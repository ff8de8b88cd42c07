#include "bkp/affine.hpp"

#include <stdexcept>

namespace bkp {

Scalar a_diagonal_f(long n, long m, const std::function<Rat(long)>& f, int B) {
  if (n < 0 || m < 0)
    throw std::invalid_argument("a_diagonal_f: negative index");
  if (n == m) return Scalar();
  if (n > m) return -a_diagonal_f(m, n, f, B);
  // Now 0 <= n < m.
  Scalar em = exp_beta(f(m), B);
  if (n == 0) {
    Rat c = Rat(1, 2) / rat_factorial(m);
    Scalar s = em;
    s.scale(c);
    return Scalar::p_pow(static_cast<int>(m)) * s;
  }
  Rat c = Rat(m - n, m + n) / (Rat(4) * rat_factorial(m) * rat_factorial(n));
  Scalar s = em * exp_beta(f(n), B);
  s.scale(c);
  return Scalar::p_pow(static_cast<int>(m + n)) * s;
}

Scalar a_spin(long n, long m, int r, int B) {
  auto f = [r](long k) { return int_pow(k, r + 1) / Rat(r + 1); };
  return a_diagonal_f(n, m, f, B);
}

AffineProvider spin_provider(int r, int B) {
  if (r < 2 || r % 2 != 0)
    throw std::invalid_argument("spin_provider: r must be even and >= 2");
  return AffineProvider{
      [r, B](long n, long m) { return a_spin(n, m, r, B); }, r, B};
}

AffineProvider diagonal_f_provider(const std::function<Rat(long)>& f, int r,
                                   int B) {
  return AffineProvider{
      [f, B](long n, long m) { return a_diagonal_f(n, m, f, B); }, r, B};
}

AffineProvider substituted_p(const AffineProvider& src, const Rat& v) {
  auto a = src.a;
  return AffineProvider{
      [a, v](long n, long m) { return a(n, m).substitute_p(v); }, src.r,
      src.beta_order};
}

Scalar modified(const AffineProvider& ap, long n, long m) {
  return ap.a(n, m) - ap.a(n, 0) * ap.a(0, m);
}

LaurentZ phi_basis(const AffineProvider& ap, long k, long I) {
  if (k < 0) throw std::invalid_argument("phi_basis: negative index");
  if (I < 1) throw std::invalid_argument("phi_basis: depth must be >= 1");
  LaurentZ s(-I, k, false);
  s.set(k, Scalar::constant(Rat(1)));
  for (long i = 1; i <= I; ++i) {
    Scalar c = modified(ap, k, i);
    c.scale(Rat(i % 2 == 0 ? 2 : -2));
    s.set(-i, c);
  }
  return s;
}

}  // namespace bkp
