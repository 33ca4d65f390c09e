#include "doctest.h"

#include <random>

#include "liegerbe/lattice.hpp"

using namespace liegerbe;

namespace {

bool divides_chain(const IVec& d) {
  for (std::size_t i = 0; i + 1 < d.size(); ++i) {
    if (d[i] == 0) return d[i + 1] == 0;
    if (d[i + 1] % d[i] != 0) return false;
  }
  return true;
}

IMat random_matrix(std::mt19937_64& rng, std::size_t m, std::size_t n, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  IMat a(m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = dist(rng);
  return a;
}

}  // namespace

TEST_CASE("smith normal form transforms") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t m = 1 + trial % 4, n = 1 + (trial / 4) % 4;
    const IMat a = random_matrix(rng, m, n, 6);
    const SmithForm f = smith_normal_form(a);
    CHECK(f.U * a * f.V == f.S);
    CHECK(f.U * f.U_inv == IMat::identity(m));
    CHECK(f.V * f.V_inv == IMat::identity(n));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) CHECK(f.S(i, j) == 0);
    CHECK(divides_chain(f.diagonal()));
  }
}

TEST_CASE("smith normal form of a known matrix") {
  // diag(2, 6) after reduction: det 12, gcd of entries 2
  IMat a{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  CHECK(smith_normal_form(a).diagonal() == IVec{2, 6, 12});
}

TEST_CASE("cokernel invariants with free part") {
  IMat a{{2, 0}, {0, 0}, {0, 3}};
  const auto inv = cokernel_invariants(a);
  CHECK(inv.free_rank == 1);
  CHECK(inv.torsion == IVec{6});
}

TEST_CASE("dual lattice") {
  SUBCASE("rank one coroot lattice") {
    const QMat gram{{2}};
    const Lattice d = dual_lattice(Lattice::standard(1), gram);
    CHECK(d == Lattice(QMat{{Rational(1, 2)}}));
  }
  SUBCASE("double dual on random lattices") {
    std::mt19937_64 rng(11);
    const QMat form{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
    int made = 0;
    while (made < 20) {
      const IMat b = random_matrix(rng, 3, 3, 4);
      if (determinant(to_rational(b)) == 0) continue;
      const Lattice l(to_rational(b));
      CHECK(dual_lattice(dual_lattice(l, form), form) == l);
      ++made;
    }
  }
  SUBCASE("singular form rejected") {
    CHECK_THROWS_AS(dual_lattice(Lattice::standard(2), QMat{{1, 1}, {1, 1}}), InvalidInput);
  }
}

TEST_CASE("quotient group") {
  SUBCASE("L/L trivial") {
    CHECK(quotient_group(Lattice::standard(3), Lattice::standard(3)).is_trivial());
  }
  SUBCASE("index via determinant") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
      const IMat b = random_matrix(rng, 3, 3, 5);
      const Rational det = determinant(to_rational(b));
      if (det == 0) continue;
      const auto g = quotient_group(Lattice::standard(3), Lattice(to_rational(b)));
      CHECK(Rational(g.order()) == abs(det));
      CHECK(divides_chain(g.invariant_factors));
      // each generator has exactly the stated order modulo the sublattice
      const Lattice sub(to_rational(b));
      for (std::size_t i = 0; i < g.generators.size(); ++i) {
        const Integer d = g.invariant_factors[i];
        CHECK(member(sub, Rational(d) * g.generators[i]));
        for (Integer k = 1; k < d; ++k)
          if (d % k == 0) CHECK_FALSE(member(sub, Rational(k) * g.generators[i]));
      }
    }
  }
  SUBCASE("not a sublattice") {
    CHECK_THROWS_AS(quotient_group(Lattice::standard(1), Lattice(QMat{{Rational(1, 2)}})), InvalidInput);
  }
}

TEST_CASE("min integer scale") {
  CHECK(min_integer_scale(QMat{{1, 2}, {3, 4}}) == 1);
  CHECK(min_integer_scale(QMat{{Rational(1, 2)}}) == 2);
  CHECK(min_integer_scale(QMat{{Rational(2, 3), Rational(1, 3)}, {Rational(1, 3), Rational(2, 3)}}) == 3);
}

TEST_CASE("membership") {
  const Lattice coweight(QMat{{Rational(1, 2)}});
  const Lattice coroot = Lattice::standard(1);
  const QVec half{Rational(1, 2)};
  CHECK(member(coweight, half));
  CHECK_FALSE(member(coroot, half));
  CHECK(member(coroot, QVec{Rational(0)}));
  CHECK_THROWS_AS(member(coroot, QVec{Rational(0), Rational(0)}), InvalidInput);

  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> dist(-9, 9);
  const Lattice l(QMat{{Rational(1, 3), 1}, {0, Rational(5, 2)}});
  for (int trial = 0; trial < 100; ++trial) {
    const Rational a = dist(rng), b = dist(rng);
    const QVec v = a * l.basis().column(0) + b * l.basis().column(1);
    CHECK(member(l, v));
  }
}

TEST_CASE("from_generators handles redundant generators") {
  const Lattice l = Lattice::from_generators(
      {QVec{Rational(1), Rational(0)}, QVec{Rational(0), Rational(1)}, QVec{Rational(1, 2), Rational(1, 2)}}, 2);
  CHECK(l.covolume() == Rational(1, 2));
  CHECK_THROWS_AS(Lattice::from_generators({QVec{Rational(1), Rational(0)}}, 2), InvalidInput);
}
