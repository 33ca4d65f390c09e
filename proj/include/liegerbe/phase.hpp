#pragma once

#include <string>

#include "liegerbe/exact.hpp"

namespace liegerbe {

/// exp(2 pi i x), stored as x mod 1 in [0, 1).
class PhaseExponent {
 public:
  PhaseExponent() = default;
  explicit PhaseExponent(const Rational& x) : value_(frac(x)) {}

  const Rational& value() const { return value_; }
  bool is_trivial() const { return value_ == 0; }

  PhaseExponent operator+(const PhaseExponent& o) const { return PhaseExponent(value_ + o.value_); }
  PhaseExponent operator-(const PhaseExponent& o) const { return PhaseExponent(value_ - o.value_); }
  PhaseExponent operator-() const { return PhaseExponent(-value_); }
  PhaseExponent& operator+=(const PhaseExponent& o) { return *this = *this + o; }
  PhaseExponent& operator-=(const PhaseExponent& o) { return *this = *this - o; }
  friend PhaseExponent operator*(const Integer& n, const PhaseExponent& p) {
    return PhaseExponent(Rational(n) * p.value_);
  }

  bool operator==(const PhaseExponent& o) const { return value_ == o.value_; }

  std::string str() const { return to_string(value_); }

 private:
  Rational value_ = 0;
};

}  // namespace liegerbe
