#pragma once

// Floating-point checks on SU(N) that the Cartan 3-form eta and the 2-form
// omega on G x G form a cocycle in the Bott-Shulman-Stasheff complex of the
// conjugation action.

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace liegerbe {

using CMat = Eigen::MatrixXcd;
using RVec = Eigen::VectorXd;

/// How a 2-form is read off a bilinear expression B: Determinant gives
/// B(u,v) - B(v,u), Averaged gives (B(u,v) - B(v,u)) / 2.
enum class WedgeConvention { Determinant, Averaged };

struct NumericsConfig {
  double h = 1e-4;
  std::uint64_t seed = 1;
  double cocycle_tol = 1e-5;
  double algebra_tol = 1e-9;
  double integral_tol = 1e-2;
  int sample_count = 100;
  WedgeConvention wedge = WedgeConvention::Determinant;
  /// Coefficient of the antisymmetrized <Ad_x theta^L(u1), theta^L(v1)> added to omega.
  double fault = 0.0;

  void validate() const;
};

/// SU(N) in its defining representation, with the basic inner product
/// <X,Y> = -kappa tr(XY) where kappa makes the coroot 2 pi i diag(1,-1,0,..) have norm 2.
class MatrixGroup {
 public:
  explicit MatrixGroup(int N);

  int N() const { return n_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  double kappa() const { return kappa_; }
  std::string name() const { return "SU(" + std::to_string(n_) + ")"; }
  /// Orthonormal basis of su(N) for the basic inner product.
  const std::vector<CMat>& basis() const { return basis_; }

  double inner(const CMat& X, const CMat& Y) const;
  CMat algebra_element(const RVec& coords) const;
  bool is_group_point(const CMat& g, double tol) const;
  bool is_algebra(const CMat& X, double tol) const;

  CMat random_point(std::mt19937_64& rng) const;
  RVec random_coords(std::mt19937_64& rng) const;

  /// Exponential chart g exp(sum y_a E_a) and its derivative along v.
  CMat chart(const CMat& g, const RVec& y) const;
  CMat chart_push(const CMat& g, const RVec& y, const RVec& v) const;

 private:
  int n_;
  double kappa_;
  std::vector<CMat> basis_;
};

enum class Side { Left, Right };

/// theta^L(v) = g^{-1} v or theta^R(v) = v g^{-1}; InvalidInput if v is not tangent at g.
CMat maurer_cartan(const MatrixGroup& G, const CMat& g, const CMat& v, Side side, double tol = 1e-8);

/// c * sum over permutations of sign <X_s1, [X_s2, X_s3]>, X_i = g^{-1} v_i.
double eval_eta(const MatrixGroup& G, const CMat& g, const CMat& v1, const CMat& v2, const CMat& v3,
                double c = 1.0 / 12.0);

/// A tangent vector to a product of groups, one velocity per factor.
using Tangent = std::vector<CMat>;

/// omega at (g,x) on u = (u1,u2), v = (v1,v2).
double eval_omega(const MatrixGroup& G, const CMat& g, const CMat& x, const Tangent& u, const Tangent& v,
                  WedgeConvention wedge = WedgeConvention::Determinant, double fault = 0.0);

/// A k-form pulled back to chart coordinates: alpha(y; v_1..v_k).
using ChartForm = std::function<double(const RVec& y, const std::vector<RVec>& vectors)>;

/// Central-difference d alpha(e_0, .., e_k) at y0 for constant frame vectors e_i.
double fd_exterior_derivative(const ChartForm& alpha, const RVec& y0, const std::vector<RVec>& frame, double h);

/// Velocity of t -> g(t) x(t) g(t)^{-1}.
CMat conjugation_push(const CMat& g, const CMat& x, const CMat& dg, const CMat& dx);

struct CocycleReport {
  std::string group;
  int samples = 0;
  double h = 0;
  NumericsConfig config;
  int sign = 0;
  double max_d_eta = 0;
  double max_d_omega_vs_partial_eta = 0;
  double max_partial_omega = 0;
  bool passed = false;
  /// First failing sample: criterion name and index.
  std::optional<std::pair<std::string, int>> witness;
};

CocycleReport check_cocycle(const MatrixGroup& G, const NumericsConfig& config);

/// Midpoint-rule integral of c_scale * eta over SU(2) in hyperspherical
/// coordinates with n^3 cells, n >= 16.
double integrate_eta_su2(int n, double c_scale = 1.0);

}  // namespace liegerbe
