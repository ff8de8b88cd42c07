#include "bkp/pfaffian.hpp"

namespace bkp {

void AntisymMatrix::set(size_t i, size_t j, const Scalar& v) {
  if (i >= n_ || j >= n_)
    throw std::out_of_range("AntisymMatrix::set: index out of range");
  if (i == j) {
    if (!v.is_zero())
      throw std::invalid_argument("AntisymMatrix::set: nonzero diagonal");
    return;
  }
  if (i < j)
    upper_[i * n_ + j] = v;
  else
    upper_[j * n_ + i] = -v;
}

Scalar AntisymMatrix::get(size_t i, size_t j) const {
  if (i >= n_ || j >= n_)
    throw std::out_of_range("AntisymMatrix::get: index out of range");
  if (i == j) return Scalar();
  if (i < j) return upper_[i * n_ + j];
  return -upper_[j * n_ + i];
}

Scalar pfaffian(const AntisymMatrix& m) {
  size_t n = m.dim();
  std::vector<std::vector<Scalar>> e(n, std::vector<Scalar>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) e[i][j] = m.get(i, j);
  return pfaffian_expand(e, Scalar::constant(Rat(1)));
}

}  // namespace bkp
