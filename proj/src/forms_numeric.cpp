#include "liegerbe/forms_numeric.hpp"

#include <cmath>
#include <numbers>
#include <unsupported/Eigen/MatrixFunctions>

#include "liegerbe/exact.hpp"

namespace liegerbe {

namespace {

using cd = std::complex<double>;
constexpr double kPi = std::numbers::pi;

double rel(double r, double a, double b) { return std::abs(r) / std::max({1.0, std::abs(a), std::abs(b)}); }

CMat commutator(const CMat& a, const CMat& b) { return a * b - b * a; }

}  // namespace

void NumericsConfig::validate() const {
  if (!(h > 0)) throw InvalidInput("fd step must be positive");
  if (!(cocycle_tol > 0 && algebra_tol > 0 && integral_tol > 0)) throw InvalidInput("tolerances must be positive");
  if (sample_count < 1) throw InvalidInput("sample count must be positive");
}

MatrixGroup::MatrixGroup(int N) : n_(N) {
  if (N < 2) throw InvalidInput("SU(N) needs N >= 2");
  CMat coroot = CMat::Zero(N, N);
  coroot(0, 0) = cd(0, 2 * kPi);
  coroot(1, 1) = cd(0, -2 * kPi);
  kappa_ = 2.0 / -(coroot * coroot).trace().real();

  auto push_normalized = [&](CMat m) { basis_.push_back(m / std::sqrt(inner(m, m))); };
  for (int j = 0; j < N; ++j)
    for (int k = j + 1; k < N; ++k) {
      CMat s = CMat::Zero(N, N), a = CMat::Zero(N, N);
      s(j, k) = s(k, j) = cd(0, 1);
      a(j, k) = 1;
      a(k, j) = -1;
      push_normalized(s);
      push_normalized(a);
    }
  for (int l = 1; l < N; ++l) {
    CMat d = CMat::Zero(N, N);
    for (int j = 0; j < l; ++j) d(j, j) = cd(0, 1);
    d(l, l) = cd(0, -l);
    push_normalized(d);
  }
}

double MatrixGroup::inner(const CMat& X, const CMat& Y) const { return -kappa_ * (X * Y).trace().real(); }

CMat MatrixGroup::algebra_element(const RVec& coords) const {
  if (coords.size() != dim()) throw InvalidInput("algebra coordinates: dimension mismatch");
  CMat X = CMat::Zero(n_, n_);
  for (int a = 0; a < dim(); ++a) X += coords[a] * basis_[a];
  return X;
}

bool MatrixGroup::is_group_point(const CMat& g, double tol) const {
  if (g.rows() != n_ || g.cols() != n_) return false;
  return (g.adjoint() * g - CMat::Identity(n_, n_)).norm() <= tol && std::abs(g.determinant() - 1.0) <= tol;
}

bool MatrixGroup::is_algebra(const CMat& X, double tol) const {
  if (X.rows() != n_ || X.cols() != n_) return false;
  return (X + X.adjoint()).norm() <= tol && std::abs(X.trace()) <= tol;
}

CMat MatrixGroup::random_point(std::mt19937_64& rng) const {
  std::normal_distribution<double> nd;
  CMat z(n_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) z(i, j) = cd(nd(rng), nd(rng));
  CMat q = Eigen::HouseholderQR<CMat>(z).householderQ();
  const cd det = q.determinant();
  return q / std::pow(det, 1.0 / n_);
}

RVec MatrixGroup::random_coords(std::mt19937_64& rng) const {
  std::normal_distribution<double> nd;
  RVec v(dim());
  for (int a = 0; a < dim(); ++a) v[a] = nd(rng);
  return v;
}

CMat MatrixGroup::chart(const CMat& g, const RVec& y) const { return g * algebra_element(y).exp(); }

CMat MatrixGroup::chart_push(const CMat& g, const RVec& y, const RVec& v) const {
  // d/dt exp(Y + tV) is the upper right block of exp([[Y, V], [0, Y]])
  const CMat Y = algebra_element(y);
  CMat block = CMat::Zero(2 * n_, 2 * n_);
  block.topLeftCorner(n_, n_) = Y;
  block.bottomRightCorner(n_, n_) = Y;
  block.topRightCorner(n_, n_) = algebra_element(v);
  const CMat e = block.exp();
  return g * e.topRightCorner(n_, n_);
}

CMat maurer_cartan(const MatrixGroup& G, const CMat& g, const CMat& v, Side side, double tol) {
  if (!G.is_group_point(g, tol)) throw InvalidInput("Maurer-Cartan form: base point is not in the group");
  const CMat ginv = g.adjoint();
  CMat X = side == Side::Left ? CMat(ginv * v) : CMat(v * ginv);
  if (!G.is_algebra(X, tol)) throw InvalidInput("Maurer-Cartan form: velocity is not tangent to the group");
  return X;
}

double eval_eta(const MatrixGroup& G, const CMat& g, const CMat& v1, const CMat& v2, const CMat& v3, double c) {
  const CMat ginv = g.adjoint();
  const CMat X[3] = {ginv * v1, ginv * v2, ginv * v3};
  static constexpr int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
  double s = 0;
  for (int p = 0; p < 6; ++p) {
    const double term = G.inner(X[perms[p][0]], commutator(X[perms[p][1]], X[perms[p][2]]));
    s += p < 3 ? term : -term;
  }
  return c * s;
}

double eval_omega(const MatrixGroup& G, const CMat& g, const CMat& x, const Tangent& u, const Tangent& v,
                  WedgeConvention wedge, double fault) {
  if (u.size() != 2 || v.size() != 2) throw InvalidInput("omega takes tangent vectors to G x G");
  const CMat ginv = g.adjoint(), xinv = x.adjoint();
  auto bilinear = [&](const Tangent& a, const Tangent& b) {
    const CMat a1 = ginv * a[0], b1 = ginv * b[0];
    const CMat ad = x * a1 * xinv;
    const double main = G.inner(ad, b1) + G.inner(a1, xinv * b[1] + b[1] * xinv);
    return -0.5 * main + fault * G.inner(ad, b1);
  };
  const double alt = bilinear(u, v) - bilinear(v, u);
  return wedge == WedgeConvention::Determinant ? alt : alt / 2;
}

double fd_exterior_derivative(const ChartForm& alpha, const RVec& y0, const std::vector<RVec>& frame, double h) {
  if (!(h > 0)) throw InvalidInput("fd step must be positive");
  if (frame.empty()) throw InvalidInput("exterior derivative needs at least one frame vector");
  double total = 0;
  for (std::size_t i = 0; i < frame.size(); ++i) {
    std::vector<RVec> rest;
    for (std::size_t k = 0; k < frame.size(); ++k)
      if (k != i) rest.push_back(frame[k]);
    const double diff = (alpha(y0 + h * frame[i], rest) - alpha(y0 - h * frame[i], rest)) / (2 * h);
    total += (i % 2 == 0) ? diff : -diff;
  }
  return total;
}

CMat conjugation_push(const CMat& g, const CMat& x, const CMat& dg, const CMat& dx) {
  const CMat ginv = g.adjoint();
  const CMat c = g * x * ginv;
  return dg * x * ginv + g * dx * ginv - c * dg * ginv;
}

namespace {

// Points and pushforwards of a product chart on G^p centered at `base`.
struct ProductChart {
  const MatrixGroup& G;
  std::vector<CMat> base;

  RVec slice(const RVec& y, std::size_t f) const { return y.segment(f * G.dim(), G.dim()); }
  std::vector<CMat> points(const RVec& y) const {
    std::vector<CMat> out;
    for (std::size_t f = 0; f < base.size(); ++f) out.push_back(G.chart(base[f], slice(y, f)));
    return out;
  }
  Tangent push(const RVec& y, const RVec& v) const {
    Tangent out;
    for (std::size_t f = 0; f < base.size(); ++f) out.push_back(G.chart_push(base[f], slice(y, f), slice(v, f)));
    return out;
  }
  // unit length, so the fd step is h in the basic metric
  RVec random_vector(std::mt19937_64& rng) const {
    RVec v(G.dim() * base.size());
    for (std::size_t f = 0; f < base.size(); ++f) v.segment(f * G.dim(), G.dim()) = G.random_coords(rng);
    return v.normalized();
  }
};

}  // namespace

CocycleReport check_cocycle(const MatrixGroup& G, const NumericsConfig& config) {
  config.validate();
  CocycleReport rep;
  rep.group = G.name();
  rep.samples = config.sample_count;
  rep.h = config.h;
  rep.config = config;
  std::mt19937_64 rng(config.seed);
  auto omega = [&](const CMat& g, const CMat& x, const Tangent& u, const Tangent& v) {
    return eval_omega(G, g, x, u, v, config.wedge, config.fault);
  };
  auto fail = [&](const char* what, int i) {
    if (!rep.witness) rep.witness = std::make_pair(std::string(what), i);
  };

  for (int i = 0; i < config.sample_count; ++i) {
    // (a) d eta = 0
    {
      const ProductChart ch{G, {G.random_point(rng)}};
      std::vector<RVec> frame;
      for (int k = 0; k < 4; ++k) frame.push_back(ch.random_vector(rng));
      const ChartForm eta = [&](const RVec& y, const std::vector<RVec>& vs) {
        const CMat p = ch.points(y)[0];
        return eval_eta(G, p, ch.push(y, vs[0])[0], ch.push(y, vs[1])[0], ch.push(y, vs[2])[0]);
      };
      const double d = fd_exterior_derivative(eta, RVec::Zero(G.dim()), frame, config.h);
      const double r = rel(d, d, 0);
      rep.max_d_eta = std::max(rep.max_d_eta, r);
      if (r > config.cocycle_tol) fail("d_eta", i);
    }
    // (b) d omega = s (d0^* eta - d1^* eta) on G x G
    {
      const ProductChart ch{G, {G.random_point(rng), G.random_point(rng)}};
      std::vector<RVec> frame;
      for (int k = 0; k < 3; ++k) frame.push_back(ch.random_vector(rng));
      const ChartForm om = [&](const RVec& y, const std::vector<RVec>& vs) {
        const auto p = ch.points(y);
        return omega(p[0], p[1], ch.push(y, vs[0]), ch.push(y, vs[1]));
      };
      const RVec y0 = RVec::Zero(2 * G.dim());
      const double lhs = fd_exterior_derivative(om, y0, frame, config.h);
      const CMat& g = ch.base[0];
      const CMat& x = ch.base[1];
      Tangent t[3];
      for (int k = 0; k < 3; ++k) t[k] = ch.push(y0, frame[k]);
      const double eta0 = eval_eta(G, x, t[0][1], t[1][1], t[2][1]);
      const CMat c = g * x * g.adjoint();
      const double eta1 = eval_eta(G, c, conjugation_push(g, x, t[0][0], t[0][1]),
                                   conjugation_push(g, x, t[1][0], t[1][1]),
                                   conjugation_push(g, x, t[2][0], t[2][1]));
      const double rhs = eta0 - eta1;
      if (rep.sign == 0) rep.sign = std::abs(lhs - rhs) <= std::abs(lhs + rhs) ? 1 : -1;
      const double r = rel(lhs - rep.sign * rhs, lhs, rhs);
      rep.max_d_omega_vs_partial_eta = std::max(rep.max_d_omega_vs_partial_eta, r);
      if (r > config.cocycle_tol) fail("d_omega_vs_partial_eta", i);
    }
    // (c) d0^* omega - d1^* omega + d2^* omega = 0 on G x G x G
    {
      const CMat g1 = G.random_point(rng), g2 = G.random_point(rng), x = G.random_point(rng);
      Tangent u, v;
      for (const CMat* p : {&g1, &g2, &x}) {
        u.push_back(*p * G.algebra_element(G.random_coords(rng)));
        v.push_back(*p * G.algebra_element(G.random_coords(rng)));
      }
      const double w0 = omega(g2, x, {u[1], u[2]}, {v[1], v[2]});
      const double w1 = omega(g1 * g2, x, {u[0] * g2 + g1 * u[1], u[2]}, {v[0] * g2 + g1 * v[1], v[2]});
      const CMat c = g2 * x * g2.adjoint();
      const double w2 = omega(g1, c, {u[0], conjugation_push(g2, x, u[1], u[2])},
                              {v[0], conjugation_push(g2, x, v[1], v[2])});
      const double sum = w0 - w1 + w2;
      const double r = std::abs(sum) / std::max({1.0, std::abs(w0), std::abs(w1), std::abs(w2)});
      rep.max_partial_omega = std::max(rep.max_partial_omega, r);
      if (r > config.cocycle_tol) fail("partial_omega", i);
    }
  }
  rep.passed = !rep.witness.has_value();
  return rep;
}

double integrate_eta_su2(int n, double c_scale) {
  if (n < 16) throw InvalidInput("integration grid must be at least 16^3");
  const MatrixGroup G(2);
  const double dchi = kPi / n, dth = kPi / n, dph = 2 * kPi / n;
  double total = 0;
  for (int i = 0; i < n; ++i) {
    const double chi = (i + 0.5) * dchi;
    const double sc = std::sin(chi), cc = std::cos(chi);
    for (int j = 0; j < n; ++j) {
      const double th = (j + 0.5) * dth;
      const double st = std::sin(th), ct = std::cos(th);
      for (int k = 0; k < n; ++k) {
        const double ph = (k + 0.5) * dph;
        const cd e = std::polar(1.0, ph);
        auto mat = [](cd a, cd b) {
          CMat m(2, 2);
          m << a, -std::conj(b), b, std::conj(a);
          return m;
        };
        const CMat g = mat(cd(cc, sc * ct), sc * st * e);
        const CMat d_chi = mat(cd(-sc, cc * ct), cc * st * e);
        const CMat d_th = mat(cd(0, -sc * st), sc * ct * e);
        const CMat d_ph = mat(0, cd(0, 1) * sc * st * e);
        total += eval_eta(G, g, d_chi, d_th, d_ph, c_scale / 12.0);
      }
    }
  }
  return total * dchi * dth * dph;
}

}  // namespace liegerbe
