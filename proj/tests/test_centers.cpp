#include "doctest.h"

#include <map>
#include <numeric>
#include <sstream>

#include "liegerbe/centers.hpp"

using namespace liegerbe;

namespace {

// Element orders read off the multiplication table.
std::size_t element_order(const FiniteGroupTable& t, std::size_t a) {
  std::size_t k = 1, x = a;
  while (x != 0) {
    x = t(x, a);
    ++k;
  }
  return k;
}

std::size_t exponent(const FiniteGroupTable& t) {
  std::size_t e = 1;
  for (std::size_t a = 0; a < t.order(); ++a) e = std::lcm(e, element_order(t, a));
  return e;
}

// Basic levels from the orthonormal models of the classical root systems.
Integer expected_basic_level(const LieType& t, const std::string& id) {
  if (id == "trivial") return 1;
  const int n = t.rank;
  switch (t.family) {
    case Family::A: {
      // Z_k in SU(N) is generated by lambda_{N/k}^vee; its norm is (N/k)(k-1)/k.
      const int N = n + 1;
      int k = 2;  // id lists the k-1 nonidentity nodes
      for (char ch : id) k += ch == '+';
      return k / std::gcd(k, N / k);
    }
    case Family::B: return 1;
    case Family::C: return n % 2 ? 2 : 1;
    case Family::D:
      if (id == "1") return 1;
      if (id.find('+') == std::string::npos) return n % 4 == 0 ? 1 : 2;  // spinor: norm n/4
      return n % 2 ? 4 : 2;
    case Family::E: return t.rank == 6 ? 3 : 2;
    default: return 0;
  }
}

}  // namespace

TEST_CASE("center orders and invariants") {
  const std::map<std::string, IVec> expected = {
      {"A1", {2}}, {"A4", {5}}, {"A8", {9}}, {"B3", {2}}, {"C5", {2}}, {"D4", {2, 2}}, {"D5", {4}},
      {"D6", {2, 2}}, {"E6", {3}}, {"E7", {2}}, {"E8", {}}, {"F4", {}}, {"G2", {}}};
  for (const auto& [name, inv] : expected) {
    CAPTURE(name);
    const RootSystem rs(LieType::parse(name[0], name[1] - '0'));
    const Center c(rs);
    CHECK(c.group().invariant_factors == inv);
    CHECK(Integer(c.order()) == c.group().order());
  }
}

TEST_CASE("center order equals Cartan determinant") {
  for (const auto& t : all_types(8)) {
    const RootSystem rs(t);
    CHECK(Rational(Center(rs).order()) == determinant(to_rational(rs.cartan())));
  }
}

TEST_CASE("subgroup enumeration") {
  auto count = [](const char* name) {
    const RootSystem rs(LieType::parse(name[0], name[1] - '0'));
    return subgroups(rs, Center(rs)).size();
  };
  CHECK(count("E8") == 1);
  CHECK(count("D5") == 3);
  CHECK(count("D4") == 5);
  CHECK(count("A5") == 4);
  CHECK(count("A7") == 4);
  CHECK(count("A8") == 3);
}

TEST_CASE("make_subgroup rejects non-subgroups") {
  const RootSystem rs(LieType{Family::A, 3});
  const Center c(rs);
  CHECK_THROWS_AS(make_subgroup(rs, c, {0, 1}), InvalidInput);
  CHECK_THROWS_AS(make_subgroup(rs, c, {1}), InvalidInput);
  CHECK(make_subgroup(rs, c, {0, c.index_of_node(2)}).order() == 2);
}

TEST_CASE("integral lattices and basic levels for all subgroups up to rank 8") {
  for (const auto& t : all_types(8)) {
    const RootSystem rs(t);
    const Center c(rs);
    for (const auto& z : subgroups(rs, c)) {
      const std::string id = subgroup_id(c, z);
      CAPTURE(t.name());
      CAPTURE(id);
      const Lattice coroot = Lattice::standard(rs.rank());
      std::vector<QVec> cw;
      for (std::size_t j = 1; j <= rs.rank(); ++j) cw.push_back(rs.fundamental_coweight(j));
      const Lattice coweight(QMat::from_columns(cw, rs.rank()));
      CHECK(contains(z.integral_lattice, coroot));
      CHECK(contains(coweight, z.integral_lattice));

      const FiniteAbelianGroup q = quotient_group(z.integral_lattice, coroot);
      const FiniteGroupTable tab = subgroup_table(c, z);
      CHECK(q.order() == Integer(z.order()));
      const Integer top = q.invariant_factors.empty() ? Integer(1) : q.invariant_factors.back();
      CHECK(top == Integer(exponent(tab)));

      CHECK(z.ell_b == expected_basic_level(t, id));
      CHECK(basic_level_search(rs, z.integral_lattice) == z.ell_b);
      // the scale only grows along coroot <= Lambda_Z <= coweight
      CHECK(basic_level(rs, coweight) % z.ell_b == 0);
    }
  }
}

TEST_CASE("small basic levels") {
  const RootSystem a1(LieType{Family::A, 1});
  CHECK(full_subgroup(a1, Center(a1)).ell_b == 2);
  const RootSystem a2(LieType{Family::A, 2});
  CHECK(full_subgroup(a2, Center(a2)).ell_b == 3);
  CHECK(trivial_subgroup(a2, Center(a2)).ell_b == 1);
}

TEST_CASE("characters") {
  SUBCASE("A1 full center") {
    const RootSystem rs(LieType{Family::A, 1});
    const auto chars = character_group(rs, full_subgroup(rs, Center(rs)));
    REQUIRE(chars.size() == 2);
    CHECK(chars[0].evaluate(QVec{Rational(1, 2)}).is_trivial());
    CHECK(chars[1].evaluate(QVec{Rational(1, 2)}).value() == Rational(1, 2));
  }
  SUBCASE("all subgroups up to rank 8") {
    for (const auto& t : all_types(8)) {
      const RootSystem rs(t);
      const Center c(rs);
      for (const auto& z : subgroups(rs, c)) {
        const auto chars = character_group(rs, z);
        CHECK(chars.size() == z.order());
        for (const auto& chi : chars) CHECK(is_integral(chi.functional));
        // distinct classes and point separation
        for (std::size_t a = 0; a < chars.size(); ++a)
          for (std::size_t b = 0; b < a; ++b) {
            bool differ = false;
            for (auto m : z.members)
              differ = differ || !(chars[a].evaluate(c.element(m).rep) == chars[b].evaluate(c.element(m).rep));
            CHECK(differ);
          }
        for (std::size_t k = 1; k < z.order(); ++k) {
          bool seen = false;
          for (const auto& chi : chars) seen = seen || !chi.evaluate(c.element(z.members[k]).rep).is_trivial();
          CHECK(seen);
        }
      }
    }
  }
}

TEST_CASE("dual of the coroot lattice is the weight lattice") {
  for (const auto& t : all_types(6)) {
    const RootSystem rs(t);
    const Lattice d = dual_lattice(Lattice::standard(rs.rank()), rs.basic_gram());
    std::vector<QVec> weights;
    for (std::size_t i = 1; i <= rs.rank(); ++i) weights.push_back(rs.fundamental_weight(i));
    CHECK(d == Lattice(QMat::from_columns(weights, rs.rank())));
  }
}

TEST_CASE("second cohomology") {
  auto cyclic = [](std::size_t n) {
    FiniteGroupTable t;
    t.mult.assign(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) t.mult[a][b] = (a + b) % n;
    return t;
  };
  CHECK(h2_u1(cyclic(1)).group.is_trivial());
  for (std::size_t n : {2, 3, 4, 6, 9}) {
    CAPTURE(n);
    CHECK(h2_u1(cyclic(n)).group.is_trivial());
  }

  const RootSystem d4(LieType{Family::D, 4});
  const Center c(d4);
  const FiniteGroupTable klein = subgroup_table(c, full_subgroup(d4, c));
  const H2Result h = h2_u1(klein);
  CHECK(h.group.invariant_factors == IVec{2});
  REQUIRE(h.representatives.size() == 1);
  const Cochain2& alpha = h.representatives[0];
  CHECK(is_normalized(alpha));
  CHECK(is_cocycle(klein, alpha));
  // A cohomologically nontrivial class on an abelian group has a non-symmetric
  // commutator form alpha(a,b) - alpha(b,a).
  bool asymmetric = false;
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) asymmetric = asymmetric || !(alpha[a][b] - alpha[b][a]).is_trivial();
  CHECK(asymmetric);

  FiniteGroupTable z2xz4;  // Z2 x Z4, Schur multiplier Z2
  z2xz4.mult.assign(8, std::vector<std::size_t>(8));
  for (std::size_t a = 0; a < 8; ++a)
    for (std::size_t b = 0; b < 8; ++b) z2xz4.mult[a][b] = ((a / 4 + b / 4) % 2) * 4 + (a % 4 + b % 4) % 4;
  CHECK(h2_u1(z2xz4).group.invariant_factors == IVec{2});
  CHECK_THROWS_AS(h2_u1(cyclic(17)), InvalidInput);
}

TEST_CASE("fundamental level table validation") {
  auto parse = [](const std::string& s) {
    std::istringstream in(s);
    return FundamentalLevelTable::parse(in, "test");
  };
  const auto ok = parse("# comment\nA 1 1 2 src\nE 7 7 2 src  # trailing\n");
  CHECK(ok.records().size() == 2);
  CHECK(ok.find(LieType{Family::E, 7}, "7")->ell_f == 2);
  CHECK_FALSE(ok.find(LieType{Family::A, 2}, "1+2"));
  CHECK_THROWS_AS(parse("A 1 1 3 src\n"), InvalidInput);
  CHECK_THROWS_AS(parse("A 2 trivial 2 src\n"), InvalidInput);
  CHECK_THROWS_AS(parse("A 2 5 1 src\n"), InvalidInput);
  CHECK_THROWS_AS(parse("A 2 1+2\n"), InvalidInput);
  CHECK_THROWS_AS(parse("A 1 1 2 src\nA 1 1 2 src\n"), InvalidInput);
}
