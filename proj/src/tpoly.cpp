#include "bkp/tpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace bkp {

long tmono_weight(const TMono& m) {
  long w = 0;
  for (size_t i = 0; i < m.size(); ++i)
    w += static_cast<long>(2 * i + 1) * m[i];
  return w;
}

void tmono_normalize(TMono& m) {
  while (!m.empty() && m.back() == 0) m.pop_back();
}

std::string tmono_to_string(const TMono& m) {
  if (m.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!first) os << "*";
    first = false;
    os << "t_" << (2 * i + 1);
    if (m[i] > 1) os << "^" << m[i];
  }
  return os.str();
}

TPoly::TPoly(int W) : W_(W) {
  if (W < 0) throw std::invalid_argument("TPoly: negative weight cutoff");
}

TPoly TPoly::one(int W) {
  TPoly p(W);
  p.add_term({}, Scalar::constant(Rat(1)));
  return p;
}

TPoly TPoly::var(long k, int W) {
  if (k < 1 || k % 2 == 0) throw std::invalid_argument("TPoly::var: k must be odd");
  TPoly p(W);
  TMono m(static_cast<size_t>((k - 1) / 2 + 1), 0);
  m.back() = 1;
  p.add_term(std::move(m), Scalar::constant(Rat(1)));
  return p;
}

TPoly TPoly::monomial(TMono m, const Scalar& c, int W) {
  TPoly p(W);
  p.add_term(std::move(m), c);
  return p;
}

Scalar TPoly::coeff(const TMono& m) const {
  TMono key = m;
  tmono_normalize(key);
  auto it = terms_.find(key);
  return it == terms_.end() ? Scalar() : it->second;
}

void TPoly::add_term(TMono m, const Scalar& c) {
  tmono_normalize(m);
  if (c.is_zero() || tmono_weight(m) > W_) return;
  auto [it, fresh] = terms_.emplace(std::move(m), c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TPoly TPoly::operator-() const {
  TPoly p(W_);
  for (const auto& [m, c] : terms_) p.terms_.emplace(m, -c);
  return p;
}

TPoly& TPoly::operator+=(const TPoly& o) {
  if (o.W_ < W_) {
    W_ = o.W_;
    for (auto it = terms_.begin(); it != terms_.end();)
      it = tmono_weight(it->first) > W_ ? terms_.erase(it) : std::next(it);
  }
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

TPoly operator*(const TPoly& a, const TPoly& b) {
  TPoly p(std::min(a.W_, b.W_));
  TMono m;
  for (const auto& [ma, ca] : a.terms_) {
    if (tmono_weight(ma) > p.W_) continue;
    for (const auto& [mb, cb] : b.terms_) {
      m.assign(std::max(ma.size(), mb.size()), 0);
      for (size_t i = 0; i < ma.size(); ++i) m[i] += ma[i];
      for (size_t i = 0; i < mb.size(); ++i) m[i] += mb[i];
      p.add_term(m, ca * cb);
    }
  }
  return p;
}

TPoly TPoly::scaled(const Scalar& c) const {
  TPoly p(W_);
  for (const auto& [m, v] : terms_) p.add_term(m, v * c);
  return p;
}

TPoly TPoly::truncated(int W) const {
  TPoly p(std::min(W, W_));
  for (const auto& [m, v] : terms_) p.add_term(m, v);
  return p;
}

Scalar TPoly::eval_t1(const Scalar& v) const {
  Scalar s;
  for (const auto& [m, c] : terms_) {
    if (m.size() > 1) continue;
    s += c * v.pow(m.empty() ? 0 : m[0]);
  }
  return s;
}

std::string TPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    std::string cs = c.to_string();
    if (cs.find(' ') != std::string::npos) cs = "(" + cs + ")";
    if (m.empty())
      os << cs;
    else
      os << cs << "*" << tmono_to_string(m);
  }
  return os.str();
}

}  // namespace bkp
