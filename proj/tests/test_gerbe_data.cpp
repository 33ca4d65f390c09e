#include "doctest.h"

#include "liegerbe/gerbe_data.hpp"
#include "liegerbe/tits.hpp"

using namespace liegerbe;

TEST_CASE("strata") {
  const RootSystem a1(LieType{Family::A, 1});
  const Stratum torus = stratum(a1, {0, 1});
  CHECK(torus.roots.empty());
  CHECK(torus.fundamental_group.free_rank == 1);
  const Stratum full = stratum(a1, {0});
  CHECK(full.roots.size() == 2);
  CHECK(full.fundamental_group == AbelianInvariants{0, {}});

  const RootSystem b2(LieType{Family::B, 2});
  CHECK(stratum(b2, {2}).roots.size() == 4);
  CHECK(stratum(b2, {2}).fundamental_group == AbelianInvariants{0, {}});

  // the mark-2 vertex of D4 has centralizer of type 4A1 with a Z2 fundamental group
  const RootSystem d4(LieType{Family::D, 4});
  const Stratum s = stratum(d4, {2});
  CHECK(s.roots.size() == 8);
  CHECK(s.fundamental_group == AbelianInvariants{0, {2}});
  REQUIRE(s.torsion_representatives.size() == 1);
  CHECK(is_integral(s.torsion_representatives[0]));

  CHECK_THROWS_AS(stratum(d4, {}), InvalidInput);
}

TEST_CASE("vertex and edge characters") {
  const RootSystem a1(LieType{Family::A, 1});
  CHECK(is_zero(vertex_character(a1, 0).functional));
  CHECK(vertex_character(a1, 1).evaluate(QVec{Rational(1)}).is_trivial());
  CHECK(a1.inner(a1.alcove_vertex(1), a1.simple_coroot(1)) == 1);

  const RootSystem a2(LieType{Family::A, 2});
  const auto r12 = a2.face_subsystem({1, 2});
  REQUIRE(r12.size() == 2);
  CHECK(a2.inner(a2.fundamental_coweight(2) - a2.fundamental_coweight(1), a2.highest_coroot()) == 0);
  CHECK(edge_character(a2, 2, 1).functional == -edge_character(a2, 1, 2).functional);
  CHECK_THROWS_AS(edge_character(a2, 1, 1), InvalidInput);

  for (const auto& t : all_types(8)) {
    const RootSystem rs(t);
    CAPTURE(t.name());
    for (std::size_t j = 0; j <= rs.rank(); ++j) CHECK_NOTHROW(vertex_character(rs, j));
    for (std::size_t i = 0; i <= rs.rank(); ++i)
      for (std::size_t j = i + 1; j <= rs.rank(); ++j) CHECK_NOTHROW(edge_character(rs, i, j));
  }
}

TEST_CASE("character cocycle relations") {
  for (auto t : {LieType{Family::A, 2}, LieType{Family::G, 2}, LieType{Family::B, 3}, LieType{Family::D, 4}}) {
    const RootSystem rs(t);
    const CheckReport rep = check_character_cocycles(rs, 1);
    CHECK(rep.ok());
    CHECK(rep.checked > 0);
  }
  CHECK_THROWS_AS(check_character_cocycles(RootSystem(LieType{Family::A, 1}), 0), InvalidInput);
}

TEST_CASE("Z x Z action is well defined") {
  const RootSystem a1(LieType{Family::A, 1});
  const Center c1(a1);
  CHECK(z2_lift_welldefined(a1, c1, full_subgroup(a1, c1), 1, 0, 1));
  const RootSystem a2(LieType{Family::A, 2});
  const Center c2(a2);
  const CenterSubgroup z = full_subgroup(a2, c2);
  for (std::size_t i = 0; i <= 2; ++i)
    for (std::size_t j = 0; j <= 2; ++j) CHECK(z2_lift_welldefined(a2, c2, z, 1, i, j));
}

TEST_CASE("descent residuals") {
  const RootSystem a1(LieType{Family::A, 1});
  const Center c(a1);
  const CenterSubgroup z = full_subgroup(a1, c);
  const QVec half{Rational(1, 2)};
  CHECK(descent_residual(a1, c, z, 1, 1, half, 1).value() == Rational(1, 2));
  CHECK(descent_residual(a1, c, z, 2, 1, half, 1).is_trivial());
  CHECK(descent_residual(a1, c, z, 1, 0, half, 0).is_trivial());
  CHECK_THROWS_AS(descent_residual(a1, c, z, 1, 1, QVec{Rational(1, 4)}, 1), InvalidInput);
  const CenterSubgroup triv = trivial_subgroup(a1, c);
  CHECK_THROWS_AS(descent_residual(a1, c, triv, 1, 0, QVec{Rational(1)}, 1), InvalidInput);
  CHECK_THROWS_AS(descent_residual(a1, c, triv, 1, 1, QVec{Rational(1)}, 0), InvalidInput);
}

TEST_CASE("minimal descent level equals the basic level") {
  for (const auto& t : all_types(8)) {
    const RootSystem rs(t);
    const Center c(rs);
    const CenterAction act(rs, c);
    for (const auto& z : subgroups(rs, c)) {
      CAPTURE(t.name());
      CAPTURE(subgroup_id(c, z));
      const auto lvl = minimal_descent_level(act, z);
      REQUIRE(lvl.has_value());
      CHECK(*lvl == z.ell_b);
      // multiples of ell_b kill every residual; every smaller level leaves one
      const auto orbit = orbit_of_zero(c, z);
      for (int m = 1; m <= 3; ++m)
        for (auto zz : z.members)
          for (const auto& zeta : z.integral_lattice.basis_vectors())
            for (auto l : orbit) CHECK(descent_residual(rs, c, z, z.ell_b * m, zz, zeta, l).is_trivial());
      for (Integer level = 1; level < z.ell_b; ++level) {
        bool witness = false;
        for (auto zz : z.members)
          for (const auto& zeta : z.integral_lattice.basis_vectors())
            for (auto l : orbit) witness = witness || !descent_residual(rs, c, z, level, zz, zeta, l).is_trivial();
        CHECK(witness);
      }
    }
  }
}

TEST_CASE("Tits representatives pair into half-integers at the basic level") {
  for (const auto& t : all_types(8)) {
    const RootSystem rs(t);
    const Center c(rs);
    if (c.order() == 1) continue;
    const CenterAction act(rs, c);
    const TitsGroup g(rs);
    const CenterSubgroup full = full_subgroup(rs, c);
    for (auto z : full.members)
      for (auto y : full.members) {
        const QVec xi = center_cocycle(g, act, z, y).xi;
        for (auto l : orbit_of_zero(c, full)) {
          const Rational p = Rational(full.ell_b) * rs.inner(rs.alcove_vertex(l), xi);
          CHECK(is_integral(2 * p));
        }
      }
  }
}

TEST_CASE("twists") {
  const RootSystem a1(LieType{Family::A, 1});
  const Center c1(a1);
  const CenterSubgroup z1 = full_subgroup(a1, c1);
  CHECK(equivariant_classes(a1, z1, 2).size() == 2);
  CHECK_THROWS_AS(equivariant_classes(a1, z1, 1), InvalidInput);
  const auto chars = character_group(a1, z1);
  CHECK(twist_class(z1, chars[0], 4).twist == chars[0]);
  const RootSystem a2(LieType{Family::A, 2});
  const Center c2(a2);
  CHECK(equivariant_classes(a2, full_subgroup(a2, c2), 3).size() == 3);
}

TEST_CASE("torsion associator") {
  const RootSystem d4(LieType{Family::D, 4});
  const Center c(d4);
  const FiniteGroupTable g = subgroup_table(c, full_subgroup(d4, c));
  const Cochain2 zero(4, std::vector<PhaseExponent>(4));
  const H2Result h = h2_u1(g);
  REQUIRE(h.representatives.size() == 1);
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b)
      for (std::size_t d = 0; d < 4; ++d) {
        CHECK(torsion_associator(g, zero, a, b, d).is_trivial());
        CHECK(torsion_associator(g, h.representatives[0], a, b, d).is_trivial());
      }

  // search the {0, 1/2}-valued normalized cochains for one that is not a cocycle
  bool found = false;
  for (unsigned mask = 0; mask < 512 && !found; ++mask) {
    Cochain2 alpha(4, std::vector<PhaseExponent>(4));
    for (std::size_t k = 0; k < 9; ++k)
      if (mask & (1u << k)) alpha[1 + k / 3][1 + k % 3] = PhaseExponent(Rational(1, 2));
    bool nonzero = false;
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t b = 0; b < 4; ++b)
        for (std::size_t d = 0; d < 4; ++d) nonzero = nonzero || !torsion_associator(g, alpha, a, b, d).is_trivial();
    CHECK(nonzero == !is_cocycle(g, alpha));
    found = nonzero;
  }
  CHECK(found);

  Cochain2 bad(4, std::vector<PhaseExponent>(4));
  bad[0][1] = PhaseExponent(Rational(1, 2));
  CHECK_THROWS_AS(torsion_associator(g, bad, 1, 1, 1), InvalidInput);
}
