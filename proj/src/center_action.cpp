#include "liegerbe/center_action.hpp"

#include <algorithm>

namespace liegerbe {

namespace {

constexpr int kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29};

// f o w as a functional.
QVec pull_back(const QVec& f, const WeylElement& w) {
  const IMat& m = w.matrix();
  QVec out(f.size());
  for (std::size_t k = 0; k < f.size(); ++k)
    for (std::size_t r = 0; r < f.size(); ++r)
      if (m(r, k) != 0) out[k] += f[r] * m(r, k);
  return out;
}

}  // namespace

QVec generic_alcove_point(const RootSystem& rs) {
  const std::size_t r = rs.rank();
  std::vector<Rational> weights;
  Rational total = 0;
  for (std::size_t j = 0; j <= r; ++j) {
    weights.push_back(1 + Rational(1, kPrimes[j]));
    total += weights.back();
  }
  QVec xi(r);
  for (std::size_t j = 1; j <= r; ++j) xi = xi + (weights[j] / total) * rs.alcove_vertex(j);
  return xi;
}

QVec affine_simple_functional(const RootSystem& rs, std::size_t j) {
  if (j == 0) return -rs.highest_root_functional();
  return rs.simple_root(j);
}

std::size_t permuted_simple_root(const RootSystem& rs, const WeylElement& w, std::size_t j) {
  // w(alpha_j) = alpha_k  iff  alpha_k o w = alpha_j
  const QVec target = affine_simple_functional(rs, j);
  for (std::size_t k = 0; k <= rs.rank(); ++k)
    if (pull_back(affine_simple_functional(rs, k), w) == target) return k;
  return rs.rank() + 1;
}

WeylElement center_weyl_element(const RootSystem& rs, const Center& c, std::size_t z, const QVec& xi0) {
  const CentralElement& e = c.element(z);
  if (!rs.in_alcove(xi0)) throw InvalidInput("center_weyl_element: base point outside the alcove");
  WeylElement w = rs.reduce_to_alcove(xi0 + e.rep).w;

  std::vector<bool> hit(rs.rank() + 1, false);
  for (std::size_t j = 0; j <= rs.rank(); ++j) {
    const std::size_t k = permuted_simple_root(rs, w, j);
    if (k > rs.rank() || hit[k]) throw InternalError("w_z does not permute the affine simple roots");
    hit[k] = true;
  }
  if (permuted_simple_root(rs, w, 0) != e.node) throw InternalError("w_z(alpha_0) is not alpha_i");
  return w;
}

WeylElement center_weyl_element(const RootSystem& rs, const Center& c, std::size_t z) {
  return center_weyl_element(rs, c, z, generic_alcove_point(rs));
}

CenterAction::CenterAction(const RootSystem& rs, const Center& c) : rs_(&rs), c_(&c) {
  for (std::size_t z = 0; z < c.order(); ++z) {
    AlcoveAutomorphism a;
    a.z = z;
    a.w = center_weyl_element(rs, c, z);
    for (std::size_t j = 0; j <= rs.rank(); ++j) {
      const QVec img = a.w.apply(rs.alcove_vertex(j)) + c.element(z).rep;
      std::size_t k = 0;
      while (k <= rs.rank() && rs.alcove_vertex(k) != img) ++k;
      if (k > rs.rank()) throw InternalError("center action does not map vertices to vertices");
      a.vertex_perm.push_back(k);
    }
    for (std::size_t j = 0; j <= rs.rank(); ++j)
      if (permuted_simple_root(rs, a.w, j) != a.vertex_perm[j])
        throw InternalError("vertex and affine-root permutations disagree");
    autos_.push_back(std::move(a));
  }
}

QVec CenterAction::act(std::size_t z, const QVec& xi) const {
  if (!rs_->in_alcove(xi)) throw InvalidInput("act_on_alcove: point outside the alcove");
  QVec out = rs_->reduce_to_alcove(xi + c_->element(z).rep).point;
  if (out != weyl_element(z).apply(xi) + c_->element(z).rep)
    throw InternalError("affine reduction disagrees with w_z");
  return out;
}

bool CenterAction::check_homomorphism(const CenterSubgroup& zs) const {
  for (auto a : zs.members)
    for (auto b : zs.members) {
      if (!(weyl_element(a) * weyl_element(b) == weyl_element(c_->multiply(a, b)))) return false;
      if (a != b && weyl_element(a) == weyl_element(b)) return false;
    }
  return true;
}

bool CenterAction::vertex_translation_identity(std::size_t z, std::size_t j) const {
  const std::size_t zinv = c_->inverse(z);
  const QVec lhs = weyl_element(z).apply(rs_->alcove_vertex(vertex_image(zinv, j)));
  const QVec rhs = rs_->alcove_vertex(j) - rs_->alcove_vertex(vertex_image(z, 0));
  return lhs == rhs;
}

bool CenterAction::lattice_stable(std::size_t z, const Lattice& integral_lattice) const {
  const WeylElement winv = weyl_element(z).inverse();
  for (const auto& zeta : integral_lattice.basis_vectors())
    if (!is_integral(winv.apply(zeta) - zeta)) return false;
  return true;
}

}  // namespace liegerbe
