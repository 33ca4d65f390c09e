#pragma once

// Exact phase calculus behind the basic gerbe and its equivariant descent:
// strata fundamental groups Z_J, vertex and edge characters, the residual
// phases of the Z^3 descent, character twists and torsion associators.

#include <optional>
#include <string>
#include <vector>

#include "liegerbe/center_action.hpp"
#include "liegerbe/centers.hpp"
#include "liegerbe/phase.hpp"

namespace liegerbe {

struct Stratum {
  std::vector<std::size_t> J;
  std::vector<std::size_t> roots;   // R_J, indices into the root system
  IMat coroot_generators;           // coroots of the positive roots of R_J, as columns
  AbelianInvariants fundamental_group;  // Z_J = Lambda_coroot / span of coroots of R_J
  std::vector<QVec> torsion_representatives;  // coroot-lattice vectors generating the torsion of Z_J
};

Stratum stratum(const RootSystem& rs, const std::vector<std::size_t>& J);

/// chi_j, functional B mu_j; InternalError if <mu_j, beta^vee> is not integral on R_j.
Character vertex_character(const RootSystem& rs, std::size_t j);
/// chi_ij, functional B(mu_j - mu_i); InternalError if it is not R_ij-invariant.
Character edge_character(const RootSystem& rs, std::size_t i, std::size_t j);

struct CheckReport {
  std::size_t checked = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Pair relation chi_ij = chi_j / chi_i at level l on Z_ij, and the triple
/// relation chi_ij chi_jk = chi_ik on functionals.
CheckReport check_character_cocycles(const RootSystem& rs, const Integer& level);

/// The Z x Z action on P^l_ij is well defined (telescoping of the proof's phases).
bool z2_lift_welldefined(const RootSystem& rs, const Center& c, const CenterSubgroup& zs, const Integer& level,
                         std::size_t i, std::size_t j);

/// Vertices l = z''.0 for z'' in Z.
std::vector<std::size_t> orbit_of_zero(const Center& c, const CenterSubgroup& zs);

/// l <mu_l, zeta> mod 1 for l in the Z-orbit of 0 and zeta in Lambda_Z.
PhaseExponent descent_residual(const RootSystem& rs, const Center& c, const CenterSubgroup& zs, const Integer& level,
                               std::size_t z, const QVec& zeta, std::size_t l);

/// The proof's phase chain computed directly: l<mu_{j_z}, w_z^{-1} zeta2> - l<mu_{k_z}, w_z^{-1} zeta3>
/// minus l(<mu_j, zeta2> - <mu_k, zeta3>), with j_z = z^{-1}.j.
PhaseExponent proof_phase_residual(const CenterAction& act, const Integer& level, std::size_t z, std::size_t j,
                                   std::size_t k, const QVec& zeta2, const QVec& zeta3);

/// Least l >= 1 at which every descent residual vanishes, searched up to 4 ell_b;
/// std::nullopt if the search fails. The proof chain is cross-checked at each level.
std::optional<Integer> minimal_descent_level(const CenterAction& act, const CenterSubgroup& zs);

struct EquivariantClass {
  Integer level;
  Character twist;
};

/// Rejects levels that are not multiples of ell_b.
EquivariantClass twist_class(const CenterSubgroup& zs, const Character& chi, const Integer& level);
std::vector<EquivariantClass> equivariant_classes(const RootSystem& rs, const CenterSubgroup& zs,
                                                  const Integer& level);

/// (d alpha)(z1, z2, z3); alpha must be normalized.
PhaseExponent torsion_associator(const FiniteGroupTable& g, const Cochain2& alpha, std::size_t z1, std::size_t z2,
                                 std::size_t z3);

}  // namespace liegerbe
