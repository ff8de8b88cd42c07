#include "bkp/multilaurent.hpp"

#include <cstdlib>
#include <stdexcept>

namespace bkp {

MultiLaurent::MultiLaurent(int nvars, int bound) : nvars_(nvars), bound_(bound) {
  if (nvars < 1) throw std::invalid_argument("MultiLaurent: need >= 1 variable");
  if (bound < 0) throw std::invalid_argument("MultiLaurent: negative bound");
}

MultiLaurent MultiLaurent::constant(int nvars, int bound, const Scalar& c) {
  MultiLaurent m(nvars, bound);
  m.add_term(Expo(static_cast<size_t>(nvars), 0), c);
  return m;
}

bool MultiLaurent::keep(const Expo& e) const {
  for (int x : e)
    if (std::abs(x) > bound_) return false;
  return true;
}

void MultiLaurent::add_term(const Expo& e, const Scalar& c) {
  if (e.size() != static_cast<size_t>(nvars_))
    throw std::invalid_argument("MultiLaurent::add_term: arity mismatch");
  if (!keep(e) || c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Scalar MultiLaurent::coeff(const Expo& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar() : it->second;
}

MultiLaurent MultiLaurent::operator-() const {
  MultiLaurent m(nvars_, bound_);
  for (const auto& [e, c] : terms_) m.terms_.emplace(e, -c);
  return m;
}

MultiLaurent& MultiLaurent::operator+=(const MultiLaurent& o) {
  if (o.nvars_ != nvars_)
    throw std::invalid_argument("MultiLaurent: arity mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiLaurent operator*(const MultiLaurent& a, const MultiLaurent& b) {
  if (a.nvars_ != b.nvars_)
    throw std::invalid_argument("MultiLaurent: arity mismatch");
  MultiLaurent m(a.nvars_, std::min(a.bound_, b.bound_));
  MultiLaurent::Expo e(static_cast<size_t>(a.nvars_));
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (int i = 0; i < a.nvars_; ++i) e[static_cast<size_t>(i)] =
          ea[static_cast<size_t>(i)] + eb[static_cast<size_t>(i)];
      m.add_term(e, ca * cb);
    }
  }
  return m;
}

MultiLaurent MultiLaurent::scaled(const Scalar& c) const {
  MultiLaurent m(nvars_, bound_);
  for (const auto& [e, v] : terms_) m.add_term(e, v * c);
  return m;
}

MultiLaurent MultiLaurent::embedded(int nvars, const std::vector<int>& slot,
                                    const std::vector<int>& sign) const {
  if (slot.size() != static_cast<size_t>(nvars_) || sign.size() != slot.size())
    throw std::invalid_argument("MultiLaurent::embedded: arity mismatch");
  MultiLaurent m(nvars, bound_);
  Expo e(static_cast<size_t>(nvars));
  for (const auto& [src, c] : terms_) {
    std::fill(e.begin(), e.end(), 0);
    Rat mult(1);
    for (int i = 0; i < nvars_; ++i) {
      int x = src[static_cast<size_t>(i)];
      e[static_cast<size_t>(slot[static_cast<size_t>(i)])] = x;
      if (sign[static_cast<size_t>(i)] < 0 && (x % 2 != 0)) mult = -mult;
    }
    Scalar v = c;
    v.scale(mult);
    m.add_term(e, v);
  }
  return m;
}

MultiLaurent MultiLaurent::odd_part() const {
  MultiLaurent m(nvars_, bound_);
  for (const auto& [e, c] : terms_) {
    bool all_odd = true;
    for (int x : e)
      if (x % 2 == 0) { all_odd = false; break; }
    if (all_odd) m.terms_.emplace(e, c);
  }
  return m;
}

}  // namespace bkp
