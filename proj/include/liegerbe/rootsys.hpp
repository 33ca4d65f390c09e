#pragma once

// Root-system data for the simple types A-G in a fixed coordinate model of
// the Cartan subalgebra t: the simple coroots are the standard basis of Q^r.
//
// Conventions
//   * Vectors of t ("t-vectors") are coordinate vectors in the coroot basis.
//   * Linear functionals on t (roots, weights) are coordinate vectors in the
//     dual basis, i.e. the fundamental-weight basis; evaluating a functional
//     f on xi is dot(f, xi).
//   * The basic inner product on t is basic_gram(); it makes short coroots
//     have squared length 2 and identifies t* with t.
//   * cartan()(i, j) = <alpha_j, alpha_i^vee>.

#include <cstddef>
#include <string>
#include <vector>

#include "liegerbe/exact.hpp"
#include "liegerbe/weyl.hpp"

namespace liegerbe {

enum class Family { A, B, C, D, E, F, G };

struct LieType {
  Family family;
  int rank;

  /// Throws InvalidInput for combinations outside A1+, B2+, C2+, D3+, E6-8, F4, G2.
  static LieType make(Family family, int rank);
  static LieType parse(char family, int rank);

  std::string name() const;
  char letter() const;
  bool operator==(const LieType&) const = default;
};

bool is_valid_type(Family family, int rank);

/// All valid types with rank <= max_rank, in (family, rank) order.
std::vector<LieType> all_types(int max_rank);

struct Alcove {
  /// mu_0 = 0, mu_j = lambda_j^vee / k_j.
  std::vector<QVec> vertices;
};

struct AlcoveReduction {
  QVec point;          // xi' in the closed alcove
  WeylElement w;       // linear part
  QVec translation;    // tau in the coroot lattice; xi' = w(xi) + tau
};

class RootSystem {
 public:
  explicit RootSystem(LieType t);

  const LieType& type() const { return type_; }
  std::size_t rank() const { return rank_; }

  const IMat& cartan() const { return cartan_; }
  const QMat& basic_gram() const { return gram_; }

  /// Roots ordered by (height, lexicographic simple-root coordinates).
  std::size_t num_roots() const { return roots_.size(); }
  /// Integer coordinates of root k in the simple-root basis.
  const IVec& root_coefficients(std::size_t k) const { return roots_[k]; }
  /// Root k as a functional on t.
  const QVec& root_functional(std::size_t k) const { return root_functionals_[k]; }
  /// Coroot of root k as a t-vector.
  const QVec& coroot(std::size_t k) const { return coroots_[k]; }
  /// Root k as a t-vector under the basic identification.
  QVec root_vector(std::size_t k) const;
  int height(std::size_t k) const;
  std::size_t index_of_root(const IVec& coefficients) const;
  std::size_t index_of_simple(std::size_t i) const { return simple_index_[i]; }
  std::size_t index_of_highest() const { return highest_; }

  const QVec& highest_root_functional() const { return root_functionals_[highest_]; }
  const QVec& highest_coroot() const { return coroots_[highest_]; }
  /// Marks k_1..k_r with highest root = sum k_i alpha_i.
  const IVec& marks() const { return roots_[highest_]; }
  /// Special nodes i (mark 1), 1-based.
  std::vector<std::size_t> special_nodes() const;

  /// Simple root alpha_i (1-based) as a functional.
  const QVec& simple_root(std::size_t i) const { return root_functionals_[simple_index_.at(i - 1)]; }
  /// Simple coroot alpha_i^vee (1-based): the unit vector e_{i-1}.
  QVec simple_coroot(std::size_t i) const { return unit(rank_, i - 1); }
  /// Fundamental coweight lambda_i^vee (1-based) as a t-vector.
  const QVec& fundamental_coweight(std::size_t i) const { return coweights_.at(i - 1); }
  /// Fundamental weight lambda_i (1-based) as a t-vector under the basic identification.
  QVec fundamental_weight(std::size_t i) const;

  /// <xi, eta> in the basic inner product.
  Rational inner(const QVec& xi, const QVec& eta) const { return pair(xi, gram_, eta); }

  /// Simple reflection s_i (1-based) acting on t.
  WeylElement simple_reflection(std::size_t i) const;
  /// Reflection in root k acting on t.
  WeylElement reflection(std::size_t k) const;
  WeylElement identity() const { return WeylElement::identity(rank_); }

  Alcove alcove() const;
  /// Alcove vertex mu_j, j in 0..r.
  QVec alcove_vertex(std::size_t j) const;
  bool in_alcove(const QVec& xi) const;

  /// Affine-Weyl reduction into the fundamental alcove.
  AlcoveReduction reduce_to_alcove(const QVec& xi) const;

  /// R_J: indices of roots taking one common integer value on every mu_j, j in J.
  std::vector<std::size_t> face_subsystem(const std::vector<std::size_t>& J) const;

  /// Right-descent decomposition of w into simple reflections.
  std::vector<std::size_t> reduced_word(const WeylElement& w) const;
  WeylElement from_word(const std::vector<std::size_t>& word) const;
  /// True when w maps the simple coroot i (1-based) to a negative coroot.
  bool is_right_descent(const WeylElement& w, std::size_t i) const;

  /// Positive iff all simple-coroot coordinates are >= 0 and one is > 0.
  static bool is_positive(const QVec& coroot);
  /// Index of the root whose coroot is `v`, or num_roots() when none.
  std::size_t index_of_coroot(const QVec& v) const;

  /// Root count for the type by closed formula.
  static std::size_t expected_root_count(LieType t);

  /// Empty when every structural invariant holds; otherwise descriptions.
  std::vector<std::string> check_invariants() const;

 private:
  LieType type_;
  std::size_t rank_;
  IMat cartan_;
  QVec root_norms_;  // squared lengths of simple roots, long = 2
  QMat gram_;
  std::vector<IVec> roots_;
  std::vector<QVec> root_functionals_;
  std::vector<QVec> coroots_;
  std::vector<std::size_t> simple_index_;
  std::size_t highest_ = 0;
  std::vector<QVec> coweights_;
};

}  // namespace liegerbe
