#include "liegerbe/lattice.hpp"

#include <algorithm>
#include <utility>

namespace liegerbe {

namespace {

// Elementary operations on a Smith form in progress. Every row operation on S
// is mirrored on U (and inversely on U_inv); every column operation on S is
// mirrored on V (and inversely on V_inv).
struct SmithWork {
  SmithForm f;
  std::size_t m, n;

  void add_row(std::size_t dst, std::size_t src, const Integer& q) {  // row dst += q row src
    if (q == 0) return;
    for (std::size_t j = 0; j < n; ++j) f.S(dst, j) += q * f.S(src, j);
    for (std::size_t j = 0; j < m; ++j) f.U(dst, j) += q * f.U(src, j);
    for (std::size_t i = 0; i < m; ++i) f.U_inv(i, src) -= q * f.U_inv(i, dst);
  }
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < n; ++j) std::swap(f.S(a, j), f.S(b, j));
    for (std::size_t j = 0; j < m; ++j) std::swap(f.U(a, j), f.U(b, j));
    for (std::size_t i = 0; i < m; ++i) std::swap(f.U_inv(i, a), f.U_inv(i, b));
  }
  void negate_row(std::size_t a) {
    for (std::size_t j = 0; j < n; ++j) f.S(a, j) = -f.S(a, j);
    for (std::size_t j = 0; j < m; ++j) f.U(a, j) = -f.U(a, j);
    for (std::size_t i = 0; i < m; ++i) f.U_inv(i, a) = -f.U_inv(i, a);
  }
  void add_col(std::size_t dst, std::size_t src, const Integer& q) {  // col dst += q col src
    if (q == 0) return;
    for (std::size_t i = 0; i < m; ++i) f.S(i, dst) += q * f.S(i, src);
    for (std::size_t i = 0; i < n; ++i) f.V(i, dst) += q * f.V(i, src);
    for (std::size_t j = 0; j < n; ++j) f.V_inv(src, j) -= q * f.V_inv(dst, j);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < m; ++i) std::swap(f.S(i, a), f.S(i, b));
    for (std::size_t i = 0; i < n; ++i) std::swap(f.V(i, a), f.V(i, b));
    for (std::size_t j = 0; j < n; ++j) std::swap(f.V_inv(a, j), f.V_inv(b, j));
  }
};

Integer fdiv(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

IVec SmithForm::diagonal() const {
  IVec d;
  for (std::size_t i = 0; i < std::min(S.rows(), S.cols()); ++i) d.push_back(S(i, i));
  return d;
}

SmithForm smith_normal_form(const IMat& a) {
  SmithWork w{{a, IMat::identity(a.rows()), IMat::identity(a.rows()), IMat::identity(a.cols()),
               IMat::identity(a.cols())},
              a.rows(),
              a.cols()};
  auto& S = w.f.S;
  const std::size_t m = w.m, n = w.n;

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    for (;;) {
      // Pivot: smallest nonzero |entry| in the trailing block.
      std::size_t pi = m, pj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (S(i, j) != 0 && (pi == m || abs(S(i, j)) < abs(S(pi, pj)))) pi = i, pj = j;
      if (pi == m) return w.f;  // trailing block is zero
      w.swap_rows(t, pi);
      w.swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (S(i, t) == 0) continue;
        w.add_row(i, t, -fdiv(S(i, t), S(t, t)));
        if (S(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (S(t, j) == 0) continue;
        w.add_col(j, t, -fdiv(S(t, j), S(t, t)));
        if (S(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Row and column are clear; enforce divisibility of the remaining block.
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (S(i, j) % S(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == m) break;
      w.add_row(t, bad, 1);
    }
    if (S(t, t) < 0) w.negate_row(t);
  }
  return w.f;
}

IMat hermite_normal_form(const IMat& rows_in) {
  IMat a(rows_in);
  const std::size_t m = a.rows(), n = a.cols();
  std::size_t r = 0;
  auto add_row = [&](std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t j = 0; j < n; ++j) a(dst, j) += q * a(src, j);
  };
  for (std::size_t c = 0; c < n && r < m; ++c) {
    // Euclid down column c until only row r is nonzero.
    for (;;) {
      std::size_t p = m;
      for (std::size_t i = r; i < m; ++i)
        if (a(i, c) != 0 && (p == m || abs(a(i, c)) < abs(a(p, c)))) p = i;
      if (p == m) break;
      if (p != r)
        for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(r, j));
      bool done = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (a(i, c) == 0) continue;
        add_row(i, r, -fdiv(a(i, c), a(r, c)));
        if (a(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (a(r, c) == 0) continue;
    if (a(r, c) < 0)
      for (std::size_t j = 0; j < n; ++j) a(r, j) = -a(r, j);
    for (std::size_t i = 0; i < r; ++i) add_row(i, r, -fdiv(a(i, c), a(r, c)));
    ++r;
  }
  IMat out(r, n);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = a(i, j);
  return out;
}

AbelianInvariants cokernel_invariants(const IMat& a) {
  AbelianInvariants inv;
  const auto d = smith_normal_form(a).diagonal();
  std::size_t nonzero = 0;
  for (const auto& x : d) {
    if (x == 0) continue;
    ++nonzero;
    if (x > 1) inv.torsion.push_back(x);
  }
  inv.free_rank = a.rows() - nonzero;
  return inv;
}

Integer FiniteAbelianGroup::order() const {
  Integer o = 1;
  for (const auto& d : invariant_factors) o *= d;
  return o;
}

std::vector<IVec> FiniteAbelianGroup::element_coordinates() const {
  std::vector<IVec> out{IVec(invariant_factors.size(), Integer(0))};
  for (std::size_t k = 0; k < invariant_factors.size(); ++k) {
    std::vector<IVec> next;
    for (const auto& e : out)
      for (Integer a = 0; a < invariant_factors[k]; ++a) {
        IVec x(e);
        x[k] = a;
        next.push_back(std::move(x));
      }
    out = std::move(next);
  }
  return out;
}

Lattice::Lattice(QMat basis) : basis_(std::move(basis)) {
  if (basis_.rows() != basis_.cols()) throw InvalidInput("lattice basis must be square");
  if (determinant(basis_) == 0) throw InvalidInput("lattice basis is singular");
}

Lattice Lattice::standard(std::size_t dim) { return Lattice(QMat::identity(dim)); }

Lattice Lattice::from_generators(const std::vector<QVec>& gens, std::size_t dim) {
  Integer den = 1;
  for (const auto& g : gens) {
    if (g.size() != dim) throw InvalidInput("generator dimension mismatch");
    den = lcm(den, denominator_lcm(g));
  }
  IMat rows(gens.size(), dim);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      Rational x = gens[i][j] * den;
      rows(i, j) = x.get_num();
    }
  const IMat h = hermite_normal_form(rows);
  if (h.rows() != dim) throw InvalidInput("generators do not span a full-rank lattice");
  QMat basis(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) basis(j, i) = Rational(h(i, j), den);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) basis(j, i).canonicalize();
  return Lattice(std::move(basis));
}

std::vector<QVec> Lattice::basis_vectors() const {
  std::vector<QVec> v;
  for (std::size_t j = 0; j < basis_.cols(); ++j) v.push_back(basis_.column(j));
  return v;
}

QMat Lattice::gram(const QMat& form) const { return basis_.transpose() * form * basis_; }

QMat Lattice::canonical_basis() const { return from_generators(basis_vectors(), dim()).basis_; }

bool Lattice::operator==(const Lattice& o) const {
  return dim() == o.dim() && canonical_basis() == o.canonical_basis();
}

Rational Lattice::covolume() const { return abs(determinant(basis_)); }

Lattice dual_lattice(const Lattice& lattice, const QMat& form) {
  if (!(form == form.transpose())) throw InvalidInput("bilinear form is not symmetric");
  if (determinant(form) == 0) throw InvalidInput("bilinear form is singular");
  // D^T (form * B) = I
  return Lattice(inverse(form * lattice.basis()).transpose());
}

FiniteAbelianGroup quotient_group(const Lattice& lattice, const Lattice& sublattice) {
  if (lattice.dim() != sublattice.dim()) throw InvalidInput("quotient: dimension mismatch");
  const QMat coords = inverse(lattice.basis()) * sublattice.basis();
  if (!is_integral(coords)) throw InvalidInput("quotient: not a sublattice");
  IMat m(coords.rows(), coords.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = coords(i, j).get_num();
  const SmithForm snf = smith_normal_form(m);
  // sublattice * V = (lattice * U^{-1}) * S
  const QMat gens = lattice.basis() * to_rational(snf.U_inv);
  FiniteAbelianGroup g;
  for (const auto& d : snf.diagonal()) {
    if (d == 0) throw InvalidInput("quotient: infinite index");
  }
  const auto diag = snf.diagonal();
  for (std::size_t i = 0; i < diag.size(); ++i) {
    if (diag[i] == 1) continue;
    g.invariant_factors.push_back(diag[i]);
    g.generators.push_back(gens.column(i));
  }
  return g;
}

Integer min_integer_scale(const QMat& m) { return denominator_lcm(m); }

bool member(const Lattice& lattice, const QVec& v) {
  if (v.size() != lattice.dim()) throw InvalidInput("member: dimension mismatch");
  return is_integral(solve(lattice.basis(), v));
}

bool contains(const Lattice& lattice, const Lattice& sub) {
  for (const auto& b : sub.basis_vectors())
    if (!member(lattice, b)) return false;
  return true;
}

}  // namespace liegerbe
