#pragma once

#include <cstddef>
#include <vector>

#include "liegerbe/exact.hpp"

namespace liegerbe {

/// Weyl group element acting on t. In the coroot coordinate model every Weyl
/// element is an integer matrix.
class WeylElement {
 public:
  WeylElement() = default;
  explicit WeylElement(IMat matrix) : matrix_(std::move(matrix)) {}

  static WeylElement identity(std::size_t rank) { return WeylElement(IMat::identity(rank)); }

  const IMat& matrix() const { return matrix_; }
  std::size_t rank() const { return matrix_.rows(); }

  /// Reduced word (1-based simple reflection indices), if attached.
  const std::vector<std::size_t>& word() const { return word_; }
  void set_word(std::vector<std::size_t> word) { word_ = std::move(word); }

  QVec apply(const QVec& xi) const;
  /// Action on F_2-vectors (coroot coordinates mod 2).
  std::vector<int> apply_mod2(const std::vector<int>& v) const;

  /// Composition: (a * b)(xi) = a(b(xi)). The product carries no word.
  WeylElement operator*(const WeylElement& o) const { return WeylElement(matrix_ * o.matrix_); }
  WeylElement inverse() const;

  bool is_identity() const { return matrix_ == IMat::identity(rank()); }
  /// Compares matrices only.
  bool operator==(const WeylElement& o) const { return matrix_ == o.matrix_; }

 private:
  IMat matrix_;
  std::vector<std::size_t> word_;
};

}  // namespace liegerbe
