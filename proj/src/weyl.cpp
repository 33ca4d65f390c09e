#include "liegerbe/weyl.hpp"

namespace liegerbe {

QVec WeylElement::apply(const QVec& xi) const {
  if (xi.size() != rank()) throw InvalidInput("Weyl action: dimension mismatch");
  QVec out(rank());
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t k = 0; k < rank(); ++k)
      if (matrix_(i, k) != 0) out[i] += matrix_(i, k) * xi[k];
  return out;
}

std::vector<int> WeylElement::apply_mod2(const std::vector<int>& v) const {
  if (v.size() != rank()) throw InvalidInput("Weyl action: dimension mismatch");
  std::vector<int> out(rank(), 0);
  for (std::size_t i = 0; i < rank(); ++i) {
    int s = 0;
    for (std::size_t k = 0; k < rank(); ++k)
      if (v[k] && mpz_odd_p(matrix_(i, k).get_mpz_t())) s ^= 1;
    out[i] = s;
  }
  return out;
}

WeylElement WeylElement::inverse() const {
  const QMat inv = liegerbe::inverse(to_rational(matrix_));
  IMat m(rank(), rank());
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j) {
      if (!is_integral(inv(i, j))) throw InternalError("Weyl element with non-integral inverse");
      m(i, j) = inv(i, j).get_num();
    }
  return WeylElement(std::move(m));
}

}  // namespace liegerbe
