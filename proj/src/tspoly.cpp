#include "bkp/tspoly.hpp"

#include <sstream>
#include <stdexcept>

namespace bkp {

TSPoly::TSPoly(int W) : W_(W) {
  if (W < 0) throw std::invalid_argument("TSPoly: negative weight cutoff");
}

TSPoly TSPoly::one(int W) {
  TSPoly p(W);
  p.add_term({}, {}, Scalar::constant(Rat(1)));
  return p;
}

TSPoly TSPoly::from_t(const TPoly& p, int W) {
  TSPoly out(W);
  for (const auto& [m, c] : p.terms()) out.add_term(m, {}, c);
  return out;
}

TSPoly TSPoly::from_s(const TPoly& p, int W) {
  TSPoly out(W);
  for (const auto& [m, c] : p.terms()) out.add_term({}, m, c);
  return out;
}

Scalar TSPoly::coeff(const TMono& t, const TMono& s) const {
  Key k{t, s};
  tmono_normalize(k.first);
  tmono_normalize(k.second);
  auto it = terms_.find(k);
  return it == terms_.end() ? Scalar() : it->second;
}

void TSPoly::add_term(TMono t, TMono s, const Scalar& c) {
  tmono_normalize(t);
  tmono_normalize(s);
  if (c.is_zero() || tmono_weight(t) + tmono_weight(s) > W_) return;
  auto [it, fresh] = terms_.emplace(Key{std::move(t), std::move(s)}, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TSPoly TSPoly::operator-() const {
  TSPoly p(W_);
  for (const auto& [k, c] : terms_) p.terms_.emplace(k, -c);
  return p;
}

TSPoly& TSPoly::operator+=(const TSPoly& o) {
  if (o.W_ < W_) {
    W_ = o.W_;
    for (auto it = terms_.begin(); it != terms_.end();)
      it = tmono_weight(it->first.first) + tmono_weight(it->first.second) > W_
               ? terms_.erase(it)
               : std::next(it);
  }
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
  return *this;
}

TSPoly operator*(const TSPoly& a, const TSPoly& b) {
  TSPoly p(std::min(a.W_, b.W_));
  TMono t, s;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      t.assign(std::max(ka.first.size(), kb.first.size()), 0);
      for (size_t i = 0; i < ka.first.size(); ++i) t[i] += ka.first[i];
      for (size_t i = 0; i < kb.first.size(); ++i) t[i] += kb.first[i];
      s.assign(std::max(ka.second.size(), kb.second.size()), 0);
      for (size_t i = 0; i < ka.second.size(); ++i) s[i] += ka.second[i];
      for (size_t i = 0; i < kb.second.size(); ++i) s[i] += kb.second[i];
      p.add_term(t, s, ca * cb);
    }
  }
  return p;
}

TSPoly TSPoly::scaled(const Scalar& c) const {
  TSPoly p(W_);
  for (const auto& [k, v] : terms_) p.add_term(k.first, k.second, v * c);
  return p;
}

std::string TSPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")*" << tmono_to_string(k.first) << "*s["
       << tmono_to_string(k.second) << "]";
  }
  return os.str();
}

}  // namespace bkp
