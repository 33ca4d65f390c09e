#pragma once

// Integer normal forms and full-rank lattices in Q^r.

#include <vector>

#include "liegerbe/exact.hpp"

namespace liegerbe {

/// U * A * V == S with U, V unimodular and S diagonal, d_1 | d_2 | ... .
struct SmithForm {
  IMat S;
  IMat U;
  IMat U_inv;
  IMat V;
  IMat V_inv;
  /// Diagonal entries (non-negative), length min(rows, cols).
  IVec diagonal() const;
};

SmithForm smith_normal_form(const IMat& a);

/// Row-style Hermite normal form of the row space: upper echelon, positive
/// pivots, entries above each pivot reduced into [0, pivot). Zero rows dropped.
IMat hermite_normal_form(const IMat& rows);

/// Invariants of Z^rows / (column span of a): free rank plus torsion factors > 1.
struct AbelianInvariants {
  std::size_t free_rank = 0;
  IVec torsion;
  bool operator==(const AbelianInvariants&) const = default;
};

AbelianInvariants cokernel_invariants(const IMat& a);

/// Finite abelian group given by invariant factors d_1 | d_2 | ... (each > 1)
/// and coset representatives of matching generators.
struct FiniteAbelianGroup {
  IVec invariant_factors;
  std::vector<QVec> generators;

  Integer order() const;
  bool is_trivial() const { return invariant_factors.empty(); }
  /// Coefficient tuples (a_1..a_k), 0 <= a_i < d_i, in lexicographic order.
  std::vector<IVec> element_coordinates() const;
};

class Lattice {
 public:
  /// Columns of `basis` are the basis vectors; must be square and invertible.
  explicit Lattice(QMat basis);

  /// Lattice spanned by a generating set of full rank.
  static Lattice from_generators(const std::vector<QVec>& gens, std::size_t dim);
  static Lattice standard(std::size_t dim);

  const QMat& basis() const { return basis_; }
  std::size_t dim() const { return basis_.rows(); }
  std::vector<QVec> basis_vectors() const;

  /// Gram matrix basis^T * form * basis.
  QMat gram(const QMat& form) const;

  /// Canonical basis (row-HNF of the scaled basis), used for equality.
  QMat canonical_basis() const;
  bool operator==(const Lattice& o) const;

  Rational covolume() const;

 private:
  QMat basis_;
};

/// {v : v^T form w in Z for all w in L}. Form must be symmetric positive definite.
Lattice dual_lattice(const Lattice& lattice, const QMat& form);

/// lattice / sublattice via Smith normal form. Throws if not a finite-index sublattice.
FiniteAbelianGroup quotient_group(const Lattice& lattice, const Lattice& sublattice);

/// Least l >= 1 with l*M integral.
Integer min_integer_scale(const QMat& m);

bool member(const Lattice& lattice, const QVec& v);

/// sub is contained in lattice.
bool contains(const Lattice& lattice, const Lattice& sub);

}  // namespace liegerbe
