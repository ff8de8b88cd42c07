#include "bkp/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace bkp {

namespace {
const Scalar kZero;
}

LaurentZ::LaurentZ(long lo, long hi, bool tail_exact)
    : lo_(lo), hi_(hi), tail_exact_(tail_exact) {
  if (lo_ > hi_) throw std::invalid_argument("LaurentZ: empty window");
  c_.resize(static_cast<size_t>(hi_ - lo_ + 1));
}

LaurentZ LaurentZ::monomial(long deg, const Scalar& c) {
  LaurentZ s(deg, deg, true);
  s.c_[0] = c;
  return s;
}

const Scalar& LaurentZ::at(long deg) const {
  if (deg > hi_ || (tail_exact_ && deg < lo_)) return kZero;
  if (deg < lo_) throw std::out_of_range("LaurentZ::at: untrusted degree");
  return c_[static_cast<size_t>(deg - lo_)];
}

void LaurentZ::set(long deg, const Scalar& c) {
  if (deg < lo_ || deg > hi_)
    throw std::out_of_range("LaurentZ::set: degree outside window");
  c_[static_cast<size_t>(deg - lo_)] = c;
}

void LaurentZ::add_at(long deg, const Scalar& c) {
  if (deg < lo_ || deg > hi_)
    throw std::out_of_range("LaurentZ::add_at: degree outside window");
  c_[static_cast<size_t>(deg - lo_)] += c;
}

bool LaurentZ::zero_on(long from, long to) const {
  for (long d = from; d <= to; ++d)
    if (!at(d).is_zero()) return false;
  return true;
}

LaurentZ LaurentZ::operator-() const {
  LaurentZ s = *this;
  for (auto& c : s.c_) c = -c;
  return s;
}

LaurentZ& LaurentZ::operator+=(const LaurentZ& o) {
  return *this = add_laurent(*this, o);
}

LaurentZ LaurentZ::scaled(const Scalar& c) const {
  LaurentZ s = *this;
  for (auto& v : s.c_) v = v * c;
  return s;
}

LaurentZ LaurentZ::derivative() const {
  LaurentZ s(lo_ - 1, hi_ - 1, tail_exact_);
  for (long d = lo_; d <= hi_; ++d) {
    Scalar c = at(d);
    c.scale(Rat(d));
    s.set(d - 1, c);
  }
  return s;
}

LaurentZ LaurentZ::shifted(long m) const {
  LaurentZ s(lo_ + m, hi_ + m, tail_exact_);
  for (long d = lo_; d <= hi_; ++d) s.set(d + m, at(d));
  return s;
}

LaurentZ LaurentZ::clipped(long lo, long hi) const {
  LaurentZ s(lo, hi, tail_exact_ && lo <= lo_);
  for (long d = lo; d <= hi; ++d) s.set(d, at(d));
  return s;
}

std::string LaurentZ::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (long d = lo_; d <= hi_; ++d) {
    if (at(d).is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "[" << at(d).to_string() << "]*z^" << d;
  }
  if (first) os << "0";
  os << "  (window [" << lo_ << "," << hi_ << "]"
     << (tail_exact_ ? ", exact tail)" : ")");
  return os.str();
}

LaurentZ add_laurent(const LaurentZ& a, const LaurentZ& b) {
  long hi = std::max(a.hi(), b.hi());
  long lo;
  bool exact = a.tail_exact() && b.tail_exact();
  if (exact) {
    lo = std::min(a.lo(), b.lo());
  } else if (a.tail_exact()) {
    lo = b.lo();
  } else if (b.tail_exact()) {
    lo = a.lo();
  } else {
    lo = std::max(a.lo(), b.lo());
  }
  if (lo > hi) throw std::invalid_argument("add_laurent: empty resulting window");
  LaurentZ s(lo, hi, exact);
  for (long d = lo; d <= hi; ++d) s.set(d, a.at(d) + b.at(d));
  return s;
}

LaurentZ sub_laurent(const LaurentZ& a, const LaurentZ& b) {
  return add_laurent(a, -b);
}

LaurentZ mul_laurent(const LaurentZ& a, const LaurentZ& b) {
  long hi = a.hi() + b.hi();
  long lo = a.lo() + b.lo();
  bool exact = a.tail_exact() && b.tail_exact();
  if (!a.tail_exact()) lo = std::max(lo, a.lo() + b.hi());
  if (!b.tail_exact()) lo = std::max(lo, b.lo() + a.hi());
  if (lo > hi) throw std::invalid_argument("mul_laurent: empty resulting window");
  LaurentZ s(lo, hi, exact);
  for (long d = lo; d <= hi; ++d) {
    Scalar c;
    long i0 = std::max(a.lo(), d - b.hi());
    long i1 = std::min(a.hi(), d - b.lo());
    for (long i = i0; i <= i1; ++i) c += a.at(i) * b.at(d - i);
    s.set(d, c);
  }
  return s;
}

bool equal_on(const LaurentZ& a, const LaurentZ& b, long from, long to) {
  for (long d = from; d <= to; ++d)
    if (a.at(d) != b.at(d)) return false;
  return true;
}

}  // namespace bkp
