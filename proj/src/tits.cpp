#include "liegerbe/tits.hpp"

namespace liegerbe {

bool TorusTwoTorsion::is_identity() const {
  for (int b : bits)
    if (b) return false;
  return true;
}

QVec TorusTwoTorsion::representative() const {
  QVec xi(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) xi[i] = Rational(bits[i], 2);
  for (auto& x : xi) x.canonicalize();
  return xi;
}

TorusTwoTorsion TorusTwoTorsion::operator+(const TorusTwoTorsion& o) const {
  if (bits.size() != o.bits.size()) throw InvalidInput("T[2]: rank mismatch");
  TorusTwoTorsion s{bits};
  for (std::size_t i = 0; i < bits.size(); ++i) s.bits[i] ^= o.bits[i];
  return s;
}

TorusTwoTorsion act(const WeylElement& w, const TorusTwoTorsion& t) { return {w.apply_mod2(t.bits)}; }

TitsElement TitsGroup::identity() const {
  TitsElement e{TorusTwoTorsion::zero(rs_->rank()), rs_->identity()};
  return e;
}

TitsElement TitsGroup::simple(std::size_t i) const {
  return TitsElement{TorusTwoTorsion::zero(rs_->rank()), rs_->simple_reflection(i)};
}

TitsElement TitsGroup::lift(const WeylElement& w) const {
  const auto& word = w.word();
  if (rs_->from_word(word) != w) throw InvalidInput("tits_lift: word does not spell the element");
  if (word.size() != rs_->reduced_word(w).size()) throw InvalidInput("tits_lift: word is not reduced");
  return TitsElement{TorusTwoTorsion::zero(rs_->rank()), w};
}

void TitsGroup::append(TitsElement& x, std::size_t i) const {
  const WeylElement wsi = x.w * rs_->simple_reflection(i);
  if (rs_->is_right_descent(x.w, i)) {
    // sigma_w sigma_i = sigma_{w s_i} sigma_i^2 = exp(w s_i(alpha_i^vee)/2) sigma_{w s_i}
    TorusTwoTorsion e = TorusTwoTorsion::zero(rs_->rank());
    e.bits[i - 1] = 1;
    x.t = x.t + act(wsi, e);
  }
  x.w = wsi;
}

TitsElement TitsGroup::from_word(const std::vector<std::size_t>& word) const {
  TitsElement x = identity();
  for (auto i : word) {
    if (i < 1 || i > rs_->rank()) throw InvalidInput("word letter out of range");
    append(x, i);
  }
  x.w.set_word(rs_->reduced_word(x.w));
  return x;
}

TitsElement TitsGroup::multiply(const TitsElement& a, const TitsElement& b) const {
  // exp(t1/2) sigma_w1 exp(t2/2) sigma_w2 = exp((t1 + w1 t2)/2) sigma_w1 sigma_w2
  TitsElement x{a.t + act(a.w, b.t), a.w};
  const auto word = b.w.word().empty() && !b.w.is_identity() ? rs_->reduced_word(b.w) : b.w.word();
  for (auto i : word) append(x, i);
  x.w.set_word(rs_->reduced_word(x.w));
  return x;
}

TitsElement TitsGroup::inverse(const TitsElement& a) const {
  // (0, w^{-1}) a = exp(t'/2), so a^{-1} = exp(t'/2) (0, w^{-1}).
  WeylElement winv = a.w.inverse();
  winv.set_word(rs_->reduced_word(winv));
  const TitsElement b{TorusTwoTorsion::zero(rs_->rank()), winv};
  const TitsElement x = multiply(b, a);
  if (!x.w.is_identity()) throw InternalError("Tits inverse: Weyl part did not cancel");
  return TitsElement{x.t, winv};
}

CenterCocycle center_cocycle(const TitsGroup& g, const CenterAction& act, std::size_t z, std::size_t z2) {
  const Center& c = act.center();
  const TitsElement a = g.lift(act.weyl_element(z));
  const TitsElement b = g.lift(act.weyl_element(z2));
  const TitsElement ab = g.lift(act.weyl_element(c.multiply(z, z2)));
  const TitsElement x = g.multiply(g.multiply(a, b), g.inverse(ab));
  if (!x.w.is_identity()) throw InternalError("center cocycle has nontrivial Weyl part");
  return CenterCocycle{x.t, x.t.representative()};
}

bool twisted_cocycle_identity(const TitsGroup& g, const CenterAction& act, const CenterSubgroup& zs) {
  const Center& c = act.center();
  const std::size_t n = c.order();
  std::vector<std::vector<TorusTwoTorsion>> table(n, std::vector<TorusTwoTorsion>(n));
  for (auto z : zs.members)
    for (auto y : zs.members) table[z][y] = center_cocycle(g, act, z, y).c;
  for (auto z : zs.members)
    for (auto y : zs.members)
      for (auto x : zs.members) {
        const auto lhs = liegerbe::act(act.weyl_element(z), table[y][x]) + table[z][c.multiply(y, x)];
        const auto rhs = table[z][y] + table[c.multiply(z, y)][x];
        if (!(lhs == rhs)) return false;
      }
  return true;
}

}  // namespace liegerbe
