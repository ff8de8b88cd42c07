#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "bkp/scalar.hpp"

namespace bkp {

// Dense antisymmetric matrix of Scalars; only entries above the diagonal are
// stored, m(i,i) = 0 and m(j,i) = -m(i,j) are implied.
class AntisymMatrix {
 public:
  explicit AntisymMatrix(size_t n) : n_(n), upper_(n * n) {}

  size_t dim() const { return n_; }
  void set(size_t i, size_t j, const Scalar& v);
  Scalar get(size_t i, size_t j) const;

 private:
  size_t n_;
  std::vector<Scalar> upper_;
};

// Pfaffian by recursive expansion along the first row:
//   Pf(M) = sum_{j>=2} (-1)^j m(1,j) Pf(M with rows/cols 1 and j removed),
// Pf of the 0x0 matrix = 1 (the ring unit `one`). Works over any commutative
// ring providing copy, +=, binary * and unary - (no default construction or
// zero element is needed: the accumulator starts from the first term).
template <class Ring>
Ring pfaffian_expand(const std::vector<std::vector<Ring>>& m, const Ring& one) {
  size_t n = m.size();
  if (n % 2 != 0)
    throw std::invalid_argument("pfaffian requires even dimension");
  std::function<Ring(const std::vector<size_t>&)> rec =
      [&](const std::vector<size_t>& idx) -> Ring {
    if (idx.empty()) return one;
    std::optional<Ring> acc;
    std::vector<size_t> rest;
    rest.reserve(idx.size() - 2);
    for (size_t j = 1; j < idx.size(); ++j) {
      rest.clear();
      for (size_t t = 1; t < idx.size(); ++t)
        if (t != j) rest.push_back(idx[t]);
      Ring term = m[idx[0]][idx[j]] * rec(rest);
      if (j % 2 == 0) term = -term;
      if (acc)
        *acc += term;
      else
        acc = std::move(term);
    }
    return *acc;
  };
  std::vector<size_t> all(n);
  for (size_t i = 0; i < n; ++i) all[i] = i;
  return rec(all);
}

Scalar pfaffian(const AntisymMatrix& m);

}  // namespace bkp
