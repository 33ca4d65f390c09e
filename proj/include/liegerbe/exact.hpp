#pragma once

// Exact arithmetic primitives: GMP integers/rationals and a small dense
// matrix template used throughout the combinatorial modules.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace liegerbe {

using Integer = mpz_class;
using Rational = mpq_class;

using IVec = std::vector<Integer>;
using QVec = std::vector<Rational>;

/// Input that violates an operation's precondition.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A mathematical identity that must hold failed; indicates a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw InvalidInput("ragged matrix initializer");
      for (const auto& v : row) data_.push_back(v);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  /// Matrix whose columns are the given vectors.
  static Matrix from_columns(const std::vector<std::vector<T>>& cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows) throw InvalidInput("column length mismatch");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> column(std::size_t j) const {
    std::vector<T> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }
  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw InvalidInput("matrix product dimension mismatch");
    Matrix p(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const T& a = (*this)(i, k);
        if (a == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) p(i, j) += a * o(k, j);
      }
    return p;
  }

  std::vector<T> operator*(const std::vector<T>& v) const {
    if (cols_ != v.size()) throw InvalidInput("matrix-vector dimension mismatch");
    std::vector<T> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) out[i] += (*this)(i, k) * v[k];
    return out;
  }

  Matrix operator-(const Matrix& o) const {
    Matrix d(*this);
    for (std::size_t i = 0; i < data_.size(); ++i) d.data_[i] -= o.data_[i];
    return d;
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  bool is_zero() const {
    for (const auto& v : data_)
      if (v != 0) return false;
    return true;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IMat = Matrix<Integer>;
using QMat = Matrix<Rational>;

QMat to_rational(const IMat& m);
QVec to_rational(const IVec& v);

/// Inverse over Q by Gauss-Jordan. Throws InvalidInput if singular.
QMat inverse(const QMat& m);
Rational determinant(QMat m);
std::size_t rank(QMat m);

/// Solve m x = b for square invertible m.
QVec solve(const QMat& m, const QVec& b);

Rational dot(const QVec& a, const QVec& b);
/// a^T g b
Rational pair(const QVec& a, const QMat& g, const QVec& b);

QVec operator+(const QVec& a, const QVec& b);
QVec operator-(const QVec& a, const QVec& b);
QVec operator-(const QVec& a);
QVec operator*(const Rational& s, const QVec& a);

bool is_integral(const Rational& q);
bool is_integral(const QVec& v);
bool is_integral(const QMat& m);
bool is_zero(const QVec& v);

Integer floor_q(const Rational& q);
/// Canonical representative of q mod 1 in [0,1).
Rational frac(const Rational& q);

/// Least common multiple of all denominators (1 for integral input).
Integer denominator_lcm(const QMat& m);
Integer denominator_lcm(const QVec& v);

/// "p/q", or "p" when integral.
std::string to_string(const Rational& q);
Rational parse_rational(const std::string& s);

/// Unit vector e_i of length n.
QVec unit(std::size_t n, std::size_t i);

}  // namespace liegerbe
