#include "doctest.h"

#include <random>

#include "liegerbe/center_action.hpp"

using namespace liegerbe;

TEST_CASE("rank one") {
  const RootSystem rs(LieType{Family::A, 1});
  const Center c(rs);
  const CenterAction act(rs, c);
  CHECK(act.weyl_element(0).is_identity());
  CHECK(act.weyl_element(0).word().empty());
  CHECK(act.weyl_element(1) == rs.simple_reflection(1));
  CHECK(act.weyl_element(1).word() == std::vector<std::size_t>{1});
  CHECK(act.act(1, QVec{Rational(0)}) == QVec{Rational(1, 2)});
  CHECK(act.act(1, QVec{Rational(1, 2)}) == QVec{Rational(0)});
  CHECK(act.act(0, QVec{Rational(1, 3)}) == QVec{Rational(1, 3)});
  CHECK_THROWS_AS(act.act(1, QVec{Rational(1)}), InvalidInput);
  CHECK(act.vertex_translation_identity(1, 1));
  CHECK(act.weyl_element(1).apply(rs.alcove_vertex(0)) == rs.alcove_vertex(1) - QVec{Rational(1, 2)});
}

TEST_CASE("A2 rotation") {
  const RootSystem rs(LieType{Family::A, 2});
  const Center c(rs);
  const CenterAction act(rs, c);
  const std::size_t z = c.index_of_node(1);
  CHECK(act.automorphism(z).vertex_perm == std::vector<std::size_t>{1, 2, 0});
  CHECK(act.act(z, rs.alcove_vertex(0)) == rs.fundamental_coweight(1));
  // oracle: affine reduction of each translated vertex
  for (std::size_t j = 0; j <= 2; ++j) {
    const QVec img = rs.reduce_to_alcove(rs.alcove_vertex(j) + rs.fundamental_coweight(1)).point;
    CHECK(img == rs.alcove_vertex(act.vertex_image(z, j)));
  }
  // w_z has order 3
  const WeylElement& w = act.weyl_element(z);
  CHECK((w * w * w).is_identity());
  CHECK_FALSE(w.is_identity());
  CHECK(act.check_homomorphism(full_subgroup(rs, c)));
}

TEST_CASE("D4 Klein four") {
  const RootSystem rs(LieType{Family::D, 4});
  const Center c(rs);
  const CenterAction act(rs, c);
  CHECK(act.check_homomorphism(full_subgroup(rs, c)));
  for (std::size_t z = 1; z < 4; ++z) CHECK((act.weyl_element(z) * act.weyl_element(z)).is_identity());
}

TEST_CASE("action identities for all types up to rank 8") {
  for (const auto& t : all_types(8)) {
    const RootSystem rs(t);
    const Center c(rs);
    if (c.order() == 1) continue;
    CAPTURE(t.name());
    const CenterAction act(rs, c);
    const CenterSubgroup full = full_subgroup(rs, c);
    CHECK(act.check_homomorphism(full));
    for (std::size_t z = 0; z < c.order(); ++z) {
      const auto& a = act.automorphism(z);
      CHECK(permuted_simple_root(rs, a.w, 0) == c.element(z).node);
      CHECK(a.vertex_perm[0] == c.element(z).node);
      CHECK(rs.from_word(a.w.word()) == a.w);
      for (std::size_t j = 0; j <= rs.rank(); ++j) CHECK(act.vertex_translation_identity(z, j));
      CHECK(act.lattice_stable(z, full.integral_lattice));
      // vertex permutations compose like the group
      for (std::size_t y = 0; y < c.order(); ++y)
        for (std::size_t j = 0; j <= rs.rank(); ++j)
          CHECK(act.vertex_image(c.multiply(z, y), j) == act.vertex_image(z, act.vertex_image(y, j)));
    }
  }
}

TEST_CASE("w_z does not depend on the generic point") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> weight(1, 97);
  for (auto t : {LieType{Family::A, 4}, LieType{Family::D, 5}, LieType{Family::E, 6}, LieType{Family::C, 3}}) {
    const RootSystem rs(t);
    const Center c(rs);
    const CenterAction act(rs, c);
    for (int trial = 0; trial < 10; ++trial) {
      QVec xi(rs.rank());
      std::vector<Rational> b;
      Rational total = 0;
      for (std::size_t j = 0; j <= rs.rank(); ++j) {
        b.push_back(Rational(weight(rng)));
        total += b.back();
      }
      for (std::size_t j = 1; j <= rs.rank(); ++j) xi = xi + (b[j] / total) * rs.alcove_vertex(j);
      for (std::size_t z = 0; z < c.order(); ++z) CHECK(center_weyl_element(rs, c, z, xi) == act.weyl_element(z));
    }
  }
}

TEST_CASE("act matches the linear formula on random alcove points") {
  std::mt19937_64 rng(37);
  std::uniform_int_distribution<int> weight(0, 20);
  const RootSystem rs(LieType{Family::A, 3});
  const Center c(rs);
  const CenterAction act(rs, c);
  for (int trial = 0; trial < 30; ++trial) {
    QVec xi(rs.rank());
    std::vector<Rational> b;
    Rational total = 0;
    for (std::size_t j = 0; j <= rs.rank(); ++j) {
      b.push_back(Rational(weight(rng) + (j == 0)));
      total += b.back();
    }
    for (std::size_t j = 1; j <= rs.rank(); ++j) xi = xi + (b[j] / total) * rs.alcove_vertex(j);
    for (std::size_t z = 0; z < c.order(); ++z) {
      const QVec y = act.act(z, xi);
      CHECK(rs.in_alcove(y));
      CHECK(y == act.weyl_element(z).apply(xi) + c.element(z).rep);
    }
  }
}
