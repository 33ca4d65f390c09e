#pragma once

// The Tits extension of the Weyl group by T[2]: elements exp(t/2) sigma_w with
// t in F_2^r (coroot coordinates) and sigma_w the product of the canonical
// simple lifts sigma_i along any reduced word of w. sigma_i^2 = exp(alpha_i^vee / 2).

#include <vector>

#include "liegerbe/center_action.hpp"
#include "liegerbe/rootsys.hpp"

namespace liegerbe {

struct TorusTwoTorsion {
  std::vector<int> bits;  // entries 0/1

  static TorusTwoTorsion zero(std::size_t rank) { return {std::vector<int>(rank, 0)}; }
  bool is_identity() const;
  /// Half-coroot representative t/2.
  QVec representative() const;
  TorusTwoTorsion operator+(const TorusTwoTorsion& o) const;
  bool operator==(const TorusTwoTorsion&) const = default;
};

/// Weyl action on T[2].
TorusTwoTorsion act(const WeylElement& w, const TorusTwoTorsion& t);

struct TitsElement {
  TorusTwoTorsion t;
  WeylElement w;  // carries a reduced word
  bool operator==(const TitsElement& o) const { return t == o.t && w == o.w; }
};

class TitsGroup {
 public:
  explicit TitsGroup(const RootSystem& rs) : rs_(&rs) {}

  const RootSystem& root_system() const { return *rs_; }
  TitsElement identity() const;
  TitsElement simple(std::size_t i) const;
  /// (0, w); the word attached to w must be reduced.
  TitsElement lift(const WeylElement& w) const;
  /// Product of the simple lifts along an arbitrary word.
  TitsElement from_word(const std::vector<std::size_t>& word) const;

  TitsElement multiply(const TitsElement& a, const TitsElement& b) const;
  TitsElement inverse(const TitsElement& a) const;

 private:
  // (t, w) * sigma_i
  void append(TitsElement& x, std::size_t i) const;

  const RootSystem* rs_;
};

struct CenterCocycle {
  TorusTwoTorsion c;
  QVec xi;  // half-coroot representative with exp(xi) = c
};

/// c_{z,z'} = lift(w_z) lift(w_z') lift(w_zz')^{-1}; InternalError if its Weyl part is not trivial.
CenterCocycle center_cocycle(const TitsGroup& g, const CenterAction& act, std::size_t z, std::size_t z2);

/// (w_z . c_{z',z''}) + c_{z,z'z''} == c_{z,z'} + c_{zz',z''} for all triples of Z.
bool twisted_cocycle_identity(const TitsGroup& g, const CenterAction& act, const CenterSubgroup& zs);

}  // namespace liegerbe
