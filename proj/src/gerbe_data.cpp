#include "liegerbe/gerbe_data.hpp"

#include <algorithm>

namespace liegerbe {

Stratum stratum(const RootSystem& rs, const std::vector<std::size_t>& J) {
  Stratum s;
  s.J = J;
  s.roots = rs.face_subsystem(J);
  std::vector<QVec> cols;
  for (auto k : s.roots)
    if (RootSystem::is_positive(rs.coroot(k))) cols.push_back(rs.coroot(k));
  s.coroot_generators = IMat(rs.rank(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t r = 0; r < rs.rank(); ++r) {
      if (!is_integral(cols[c][r])) throw InternalError("coroot outside the coroot lattice");
      s.coroot_generators(r, c) = cols[c][r].get_num();
    }
  s.fundamental_group = cokernel_invariants(s.coroot_generators);
  const SmithForm f = smith_normal_form(s.coroot_generators);
  const auto d = f.diagonal();
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] > 1) s.torsion_representatives.push_back(to_rational(f.U_inv.column(i)));
  return s;
}

Character vertex_character(const RootSystem& rs, std::size_t j) {
  const QVec mu = rs.alcove_vertex(j);
  for (auto k : rs.face_subsystem({j}))
    if (!is_integral(rs.inner(mu, rs.coroot(k))))
      throw InternalError("vertex " + std::to_string(j) + " is not integral on the coroots of R_j");
  return Character{rs.basic_gram() * mu};
}

Character edge_character(const RootSystem& rs, std::size_t i, std::size_t j) {
  if (i == j) throw InvalidInput("edge_character: i == j");
  const QVec d = rs.alcove_vertex(j) - rs.alcove_vertex(i);
  for (auto k : rs.face_subsystem({i, j}))
    if (rs.inner(d, rs.coroot(k)) != 0)
      throw InternalError("edge character is not invariant on R_" + std::to_string(i) + std::to_string(j));
  return Character{rs.basic_gram() * d};
}

CheckReport check_character_cocycles(const RootSystem& rs, const Integer& level) {
  if (level < 1) throw InvalidInput("level must be positive");
  CheckReport rep;
  const std::size_t r = rs.rank();
  std::vector<Character> vert;
  for (std::size_t j = 0; j <= r; ++j) vert.push_back(vertex_character(rs, j));
  for (std::size_t i = 0; i <= r; ++i)
    for (std::size_t j = 0; j <= r; ++j) {
      if (i == j) continue;
      const Character e = edge_character(rs, i, j);
      std::vector<QVec> zetas;
      for (std::size_t k = 0; k < r; ++k) zetas.push_back(unit(r, k));
      for (auto& t : stratum(rs, {i, j}).torsion_representatives) zetas.push_back(t);
      for (const auto& zeta : zetas) {
        ++rep.checked;
        const PhaseExponent res =
            level * e.evaluate(zeta) - (level * vert[j].evaluate(zeta) - level * vert[i].evaluate(zeta));
        if (!res.is_trivial())
          rep.violations.push_back("pair (" + std::to_string(i) + "," + std::to_string(j) + ") residue " + res.str());
      }
    }
  for (std::size_t i = 0; i <= r; ++i)
    for (std::size_t j = 0; j <= r; ++j)
      for (std::size_t k = 0; k <= r; ++k) {
        if (i == j || j == k || i == k) continue;
        ++rep.checked;
        const QVec sum = edge_character(rs, i, j).functional + edge_character(rs, j, k).functional;
        if (sum != edge_character(rs, i, k).functional)
          rep.violations.push_back("triple (" + std::to_string(i) + "," + std::to_string(j) + "," +
                                   std::to_string(k) + ")");
      }
  return rep;
}

bool z2_lift_welldefined(const RootSystem& rs, const Center& c, const CenterSubgroup& zs, const Integer& level,
                         std::size_t i, std::size_t j) {
  const std::size_t r = rs.rank();
  const Rational l(level);
  // l<mu_i, .> and l<mu_j, .> as functionals
  const QVec fi = l * (rs.basic_gram() * rs.alcove_vertex(i));
  const QVec fj = l * (rs.basic_gram() * rs.alcove_vertex(j));
  std::vector<QVec> xis{QVec(r)};
  for (std::size_t k = 0; k < r; ++k) xis.push_back(unit(r, k));
  for (auto a : zs.members)
    for (auto b : zs.members) {
      const QVec& z1 = c.element(a).rep;
      const QVec& z2 = c.element(b).rep;
      const Rational base = dot(fi, z1) - dot(fj, z2);
      for (const auto& x1 : xis)
        for (const auto& x2 : xis) {
          const Rational shifted = dot(fi, z1 + x1) - dot(fj, z2 + x2);
          const Rational lattice = dot(fi, x1) - dot(fj, x2);
          if (!PhaseExponent(shifted - base - lattice).is_trivial()) return false;
        }
    }
  return true;
}

std::vector<std::size_t> orbit_of_zero(const Center& c, const CenterSubgroup& zs) {
  std::vector<std::size_t> out;
  for (auto a : zs.members) out.push_back(c.element(a).node);
  std::sort(out.begin(), out.end());
  return out;
}

PhaseExponent descent_residual(const RootSystem& rs, const Center& c, const CenterSubgroup& zs, const Integer& level,
                               std::size_t z, const QVec& zeta, std::size_t l) {
  if (!zs.contains(z)) throw InvalidInput("descent_residual: z is not in Z");
  const auto orbit = orbit_of_zero(c, zs);
  if (!std::binary_search(orbit.begin(), orbit.end(), l))
    throw InvalidInput("descent_residual: vertex " + std::to_string(l) + " is not in the orbit of 0");
  if (!member(zs.integral_lattice, zeta)) throw InvalidInput("descent_residual: zeta is not in Lambda_Z");
  return PhaseExponent(Rational(level) * rs.inner(rs.alcove_vertex(l), zeta));
}

PhaseExponent proof_phase_residual(const CenterAction& act, const Integer& level, std::size_t z, std::size_t j,
                                   std::size_t k, const QVec& zeta2, const QVec& zeta3) {
  const RootSystem& rs = act.root_system();
  const Center& c = act.center();
  const WeylElement winv = act.weyl_element(z).inverse();
  const std::size_t zinv = c.inverse(z);
  const std::size_t jz = act.vertex_image(zinv, j), kz = act.vertex_image(zinv, k);
  const Rational l(level);
  const Rational moved = l * rs.inner(rs.alcove_vertex(jz), winv.apply(zeta2)) -
                         l * rs.inner(rs.alcove_vertex(kz), winv.apply(zeta3));
  const Rational wanted = l * (rs.inner(rs.alcove_vertex(j), zeta2) - rs.inner(rs.alcove_vertex(k), zeta3));
  return PhaseExponent(moved - wanted);
}

std::optional<Integer> minimal_descent_level(const CenterAction& act, const CenterSubgroup& zs) {
  const RootSystem& rs = act.root_system();
  const Center& c = act.center();
  const std::size_t r = rs.rank();
  const auto basis = zs.integral_lattice.basis_vectors();
  const auto orbit = orbit_of_zero(c, zs);
  const QVec zero(r);
  for (Integer level = 1; level <= 4 * zs.ell_b; ++level) {
    bool residual_free = true;
    for (auto z : zs.members)
      for (const auto& zeta : basis)
        for (auto l : orbit)
          if (!descent_residual(rs, c, zs, level, z, zeta, l).is_trivial()) residual_free = false;

    bool chain_free = true;
    for (auto z : zs.members)
      for (const auto& zeta : basis)
        for (std::size_t j = 0; j <= r && chain_free; ++j)
          if (!proof_phase_residual(act, level, z, j, 0, zeta, zero).is_trivial()) chain_free = false;

    if (residual_free != chain_free)
      throw InternalError("descent residuals and the proof's phase chain disagree at level " + level.get_str());
    if (residual_free) return level;
  }
  return std::nullopt;
}

EquivariantClass twist_class(const CenterSubgroup& zs, const Character& chi, const Integer& level) {
  if (level < 1 || level % zs.ell_b != 0)
    throw InvalidInput("level " + level.get_str() + " is not a multiple of the basic level " + zs.ell_b.get_str());
  return EquivariantClass{level, chi};
}

std::vector<EquivariantClass> equivariant_classes(const RootSystem& rs, const CenterSubgroup& zs,
                                                  const Integer& level) {
  std::vector<EquivariantClass> out;
  for (const auto& chi : character_group(rs, zs)) out.push_back(twist_class(zs, chi, level));
  return out;
}

PhaseExponent torsion_associator(const FiniteGroupTable& g, const Cochain2& alpha, std::size_t z1, std::size_t z2,
                                 std::size_t z3) {
  if (alpha.size() != g.order()) throw InvalidInput("cochain size does not match the group");
  if (!is_normalized(alpha)) throw InvalidInput("torsion_associator: cochain is not normalized");
  return coboundary(g, alpha, z1, z2, z3);
}

}  // namespace liegerbe
