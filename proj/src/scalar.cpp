#include "bkp/scalar.hpp"

#include <sstream>
#include <stdexcept>

namespace bkp {

Scalar Scalar::monomial(int p_exp, int beta_exp, const Rat& c) {
  Scalar s;
  if (!c.is_zero()) s.terms_[{p_exp, beta_exp}] = c;
  return s;
}

Rat Scalar::coeff(int p_exp, int beta_exp) const {
  auto it = terms_.find({p_exp, beta_exp});
  return it == terms_.end() ? Rat(0) : it->second;
}

std::map<int, Rat> Scalar::beta_slice(int beta_exp) const {
  std::map<int, Rat> out;
  for (const auto& [k, c] : terms_)
    if (k.second == beta_exp) out[k.first] = c;
  return out;
}

Scalar Scalar::truncated(int B) const {
  Scalar s = *this;
  if (B < s.order_) {
    s.order_ = B;
    s.drop_high_beta();
  }
  return s;
}

void Scalar::drop_high_beta() {
  if (order_ == kBetaExact) return;
  for (auto it = terms_.begin(); it != terms_.end();)
    it = it->first.second > order_ ? terms_.erase(it) : std::next(it);
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  for (auto& [k, c] : s.terms_) c = -c;
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  order_ = std::min(order_, o.order_);
  for (const auto& [k, c] : o.terms_) {
    auto [it, fresh] = terms_.emplace(k, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  drop_high_beta();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar s;
  s.order_ = std::min(a.order_, b.order_);
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      int be = ka.second + kb.second;
      if (s.order_ != Scalar::kBetaExact && be > s.order_) continue;
      Scalar::Key k{ka.first + kb.first, be};
      auto [it, fresh] = s.terms_.emplace(k, ca * cb);
      if (!fresh) {
        it->second += ca * cb;
        if (it->second.is_zero()) s.terms_.erase(it);
      }
    }
  }
  return s;
}

Scalar& Scalar::scale(const Rat& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

Scalar Scalar::pow(int e) const {
  if (e < 0) throw std::invalid_argument("Scalar::pow: negative exponent");
  Scalar r = constant(Rat(1));
  r.order_ = order_;
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

Scalar Scalar::substitute_p(const Rat& v) const {
  Scalar s;
  s.order_ = order_;
  for (const auto& [k, c] : terms_) {
    Rat coeff = c * v.pow(k.first);
    if (coeff.is_zero()) continue;
    auto [it, fresh] = s.terms_.emplace(Key{0, k.second}, coeff);
    if (!fresh) {
      it->second += coeff;
      if (it->second.is_zero()) s.terms_.erase(it);
    }
  }
  return s;
}

std::string Scalar::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    if (k.first != 0) os << "*p^" << k.first;
    if (k.second != 0) os << "*beta^" << k.second;
  }
  if (order_ != kBetaExact) os << " + O(beta^" << (order_ + 1) << ")";
  return os.str();
}

Scalar exp_beta(const Rat& x, int B) {
  if (B < 0) throw std::invalid_argument("exp_beta: negative order");
  Scalar s;
  Rat term(1);
  for (int j = 0; j <= B; ++j) {
    if (j > 0) term = term * x / Rat(j);
    s += Scalar::monomial(0, j, term);
  }
  return s.truncated(B);
}

Scalar f_exp(long k, int r, int B) {
  if (r < 2 || r % 2 != 0) throw std::invalid_argument("f_exp: r must be even and >= 2");
  Rat x = int_pow(k, r + 1) / Rat(r + 1);
  return exp_beta(x, B);
}

}  // namespace bkp
