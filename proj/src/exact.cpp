#include "liegerbe/exact.hpp"

#include <utility>

namespace liegerbe {

QMat to_rational(const IMat& m) {
  QMat q(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) q(i, j) = Rational(m(i, j));
  return q;
}

QVec to_rational(const IVec& v) {
  QVec q;
  q.reserve(v.size());
  for (const auto& x : v) q.emplace_back(x);
  return q;
}

namespace {

// Row-reduce [m | aug] in place; returns the rank and the determinant of m.
struct Elimination {
  std::size_t rank = 0;
  Rational det = 1;
};

Elimination gauss_jordan(QMat& m, QMat* aug) {
  Elimination e;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c) == 0) ++p;
    if (p == rows) {
      e.det = 0;
      continue;
    }
    if (p != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
      if (aug)
        for (std::size_t j = 0; j < aug->cols(); ++j) std::swap((*aug)(p, j), (*aug)(r, j));
      e.det = -e.det;
    }
    const Rational pivot = m(r, c);
    e.det *= pivot;
    for (std::size_t j = 0; j < cols; ++j) m(r, j) /= pivot;
    if (aug)
      for (std::size_t j = 0; j < aug->cols(); ++j) (*aug)(r, j) /= pivot;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Rational f = m(i, c);
      for (std::size_t j = 0; j < cols; ++j) m(i, j) -= f * m(r, j);
      if (aug)
        for (std::size_t j = 0; j < aug->cols(); ++j) (*aug)(i, j) -= f * (*aug)(r, j);
    }
    ++r;
  }
  e.rank = r;
  if (r < rows || rows != cols) e.det = 0;
  return e;
}

}  // namespace

QMat inverse(const QMat& m) {
  if (m.rows() != m.cols()) throw InvalidInput("inverse of non-square matrix");
  QMat work(m);
  QMat inv = QMat::identity(m.rows());
  const auto e = gauss_jordan(work, &inv);
  if (e.rank != m.rows()) throw InvalidInput("singular matrix");
  return inv;
}

Rational determinant(QMat m) {
  if (m.rows() != m.cols()) throw InvalidInput("determinant of non-square matrix");
  return gauss_jordan(m, nullptr).det;
}

std::size_t rank(QMat m) { return gauss_jordan(m, nullptr).rank; }

QVec solve(const QMat& m, const QVec& b) {
  if (m.rows() != b.size()) throw InvalidInput("solve: dimension mismatch");
  return inverse(m) * b;
}

Rational dot(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw InvalidInput("dot: dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational pair(const QVec& a, const QMat& g, const QVec& b) { return dot(a, g * b); }

QVec operator+(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw InvalidInput("vector sum: dimension mismatch");
  QVec s(a);
  for (std::size_t i = 0; i < a.size(); ++i) s[i] += b[i];
  return s;
}

QVec operator-(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw InvalidInput("vector difference: dimension mismatch");
  QVec s(a);
  for (std::size_t i = 0; i < a.size(); ++i) s[i] -= b[i];
  return s;
}

QVec operator-(const QVec& a) {
  QVec s(a);
  for (auto& x : s) x = -x;
  return s;
}

QVec operator*(const Rational& s, const QVec& a) {
  QVec r(a);
  for (auto& x : r) x *= s;
  return r;
}

bool is_integral(const Rational& q) { return q.get_den() == 1; }

bool is_integral(const QVec& v) {
  for (const auto& x : v)
    if (!is_integral(x)) return false;
  return true;
}

bool is_integral(const QMat& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!is_integral(m(i, j))) return false;
  return true;
}

bool is_zero(const QVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

Integer floor_q(const Rational& q) {
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return f;
}

Rational frac(const Rational& q) { return q - Rational(floor_q(q)); }

Integer denominator_lcm(const QMat& m) {
  Integer l = 1;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) l = lcm(l, Integer(m(i, j).get_den()));
  return l;
}

Integer denominator_lcm(const QVec& v) {
  Integer l = 1;
  for (const auto& x : v) l = lcm(l, Integer(x.get_den()));
  return l;
}

std::string to_string(const Rational& q) {
  if (is_integral(q)) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0) throw InvalidInput("not a rational number: '" + s + "'");
  if (q.get_den() == 0) throw InvalidInput("zero denominator: '" + s + "'");
  q.canonicalize();
  return q;
}

QVec unit(std::size_t n, std::size_t i) {
  QVec e(n);
  e.at(i) = 1;
  return e;
}

}  // namespace liegerbe
