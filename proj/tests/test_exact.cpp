#include "doctest.h"

#include "liegerbe/exact.hpp"

using namespace liegerbe;

TEST_CASE("rational string round trip") {
  CHECK(to_string(Rational(3, 4)) == "3/4");
  CHECK(to_string(Rational(-2)) == "-2");
  CHECK(parse_rational("6/8") == Rational(3, 4));
  CHECK(parse_rational("-5") == Rational(-5));
  CHECK_THROWS_AS(parse_rational("1/0"), InvalidInput);
  CHECK_THROWS_AS(parse_rational("abc"), InvalidInput);
}

TEST_CASE("floor and fractional part") {
  CHECK(floor_q(Rational(-1, 2)) == -1);
  CHECK(floor_q(Rational(7, 3)) == 2);
  CHECK(frac(Rational(-1, 3)) == Rational(2, 3));
  CHECK(frac(Rational(5)) == 0);
}

TEST_CASE("inverse and determinant") {
  QMat m{{2, 1}, {1, 1}};
  CHECK(determinant(m) == 1);
  CHECK(inverse(m) * m == QMat::identity(2));
  QMat s{{1, 2}, {2, 4}};
  CHECK(determinant(s) == 0);
  CHECK(rank(s) == 1);
  CHECK_THROWS_AS(inverse(s), InvalidInput);
}

TEST_CASE("solve and pairing") {
  QMat m{{2, -1}, {-1, 2}};
  QVec b{Rational(1), Rational(0)};
  QVec x = solve(m, b);
  CHECK(x == QVec{Rational(2, 3), Rational(1, 3)});
  CHECK(pair(x, m, x) == Rational(2, 3));
  CHECK(dot(x, b) == Rational(2, 3));
}

TEST_CASE("denominator lcm") {
  QMat m{{Rational(1, 2), Rational(1, 3)}, {Rational(0), Rational(5, 4)}};
  CHECK(denominator_lcm(m) == 12);
  CHECK(is_integral(QVec{Rational(2), Rational(-3)}));
  CHECK_FALSE(is_integral(QVec{Rational(1, 2)}));
}
