#pragma once

// Action of the center on the fundamental alcove: z.xi = w_z(xi) + lambda_i^vee
// for z = exp(lambda_i^vee), where w_z permutes the affine simple roots with
// w_z(alpha_0) = alpha_i.

#include <vector>

#include "liegerbe/centers.hpp"
#include "liegerbe/rootsys.hpp"

namespace liegerbe {

struct AlcoveAutomorphism {
  std::size_t z = 0;                     // index into Center::elements()
  WeylElement w;                         // w_z, with reduced word
  std::vector<std::size_t> vertex_perm;  // j -> z.j on 0..r
};

/// Interior point of the alcove with barycentric weights perturbed by distinct primes.
QVec generic_alcove_point(const RootSystem& rs);

/// Affine simple root alpha_j as a functional, alpha_0 = -highest root.
QVec affine_simple_functional(const RootSystem& rs, std::size_t j);

/// w_z read off the affine reduction of xi0 + lambda_i^vee, then checked
/// against the defining constraints (InternalError if they fail).
WeylElement center_weyl_element(const RootSystem& rs, const Center& c, std::size_t z, const QVec& xi0);
WeylElement center_weyl_element(const RootSystem& rs, const Center& c, std::size_t z);

/// Image of alpha_j (j in 0..r) under w, as an index in 0..r, or r+1 if w(alpha_j)
/// is not an affine simple root.
std::size_t permuted_simple_root(const RootSystem& rs, const WeylElement& w, std::size_t j);

class CenterAction {
 public:
  CenterAction(const RootSystem& rs, const Center& c);

  const RootSystem& root_system() const { return *rs_; }
  const Center& center() const { return *c_; }
  const AlcoveAutomorphism& automorphism(std::size_t z) const { return autos_.at(z); }
  const WeylElement& weyl_element(std::size_t z) const { return autos_.at(z).w; }
  std::size_t vertex_image(std::size_t z, std::size_t j) const { return autos_.at(z).vertex_perm.at(j); }

  /// z.xi for xi in the alcove, as the alcove representative of xi + lambda.
  QVec act(std::size_t z, const QVec& xi) const;

  /// w_z w_z' = w_{zz'} on all pairs of Z and z -> w_z injective on Z.
  bool check_homomorphism(const CenterSubgroup& zs) const;
  /// w_z(mu_{z^{-1}.j}) == mu_j - z.mu_0.
  bool vertex_translation_identity(std::size_t z, std::size_t j) const;
  /// w_z^{-1}(zeta) - zeta lies in the coroot lattice for each basis vector of Lambda_Z.
  bool lattice_stable(std::size_t z, const Lattice& integral_lattice) const;

 private:
  const RootSystem* rs_;
  const Center* c_;
  std::vector<AlcoveAutomorphism> autos_;
};

}  // namespace liegerbe
