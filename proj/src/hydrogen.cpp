#include "relhur/hydrogen.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "relhur/specfun.hpp"

namespace relhur::hydrogen {

namespace {

using C = std::complex<double>;

void require_finite_dispersion(double g) {
  if (!(g > 0.5)) throw DivergenceError("hydrogen: dp^2 diverges for gamma_c <= 1/2");
}

}  // namespace

CoulombState CoulombState::from_z(int Z, double alpha) {
  if (Z <= 0) throw DomainError("CoulombState: Z must be positive");
  if (!(alpha > 0.0)) throw DomainError("CoulombState: alpha must be positive");
  const double az = alpha * Z;
  if (!(az < 1.0)) throw DomainError("CoulombState: alpha Z = " + std::to_string(az) + " >= 1");
  return {Z, alpha, std::sqrt(1.0 - az * az)};
}

CoulombState CoulombState::from_gamma(double gamma_c) {
  if (!(gamma_c > 0.0 && gamma_c <= 1.0)) throw DomainError("CoulombState: gamma_c must lie in (0, 1]");
  CoulombState s;
  s.gamma_c = gamma_c;
  return s;
}

double CoulombState::decay() const { return std::sqrt((1.0 - gamma_c) * (1.0 + gamma_c)); }

double CoulombState::small_component() const { return std::sqrt((1.0 - gamma_c) / (1.0 + gamma_c)); }

double CoulombState::normalization() const {
  const double g = gamma_c;
  const double num = std::pow(2.0, 2.0 * g) * std::pow(1.0 + g, g + 1.5) * std::pow(1.0 - g, g + 0.5);
  return std::sqrt(num / (4.0 * std::numbers::pi * specfun::gamma_fn(1.0 + 2.0 * g)));
}

dirac::Bispinor ground_bispinor(const CoulombState& state, double r, double theta, double phi) {
  if (!(state.gamma_c > 0.0 && state.gamma_c <= 1.0)) throw DomainError("ground_bispinor: gamma_c out of (0, 1]");
  if (!(r > 0.0)) throw DomainError("ground_bispinor: r must be positive");
  const double g = state.gamma_c;
  const double radial = state.normalization() * std::pow(r, g - 1.0) * std::exp(-state.decay() * r);
  const double k = state.small_component();
  const C i(0.0, 1.0);
  dirac::Bispinor psi;
  psi << C(1.0), C(0.0), i * k * std::cos(theta), -i * k * std::exp(i * phi) * std::sin(theta);
  return psi * radial;
}

double uncertainty_product_closed(const CoulombState& state) {
  const double g = state.gamma_c;
  require_finite_dispersion(g);
  return std::sqrt((g * g + 5.0 * g + 2.0 - g * g * g) / (2.0 * g * (2.0 * g - 1.0)));
}

ClosedMoments closed_moments(const CoulombState& state) {
  const double g = state.gamma_c;
  require_finite_dispersion(g);
  if (!(g < 1.0)) throw DomainError("closed_moments: gamma_c = 1 is not normalizable in Compton units");
  const double dr2 = (2.0 * g + 1.0) / (2.0 * (1.0 - g));
  const double dp2 = (1.0 - g * g) * (2.0 - g) / (g * (2.0 * g - 1.0));
  return {dr2, dp2, std::sqrt(dr2 * dp2)};
}

double d_parameter(const CoulombState& state) {
  const double g = state.gamma_c;
  require_finite_dispersion(g);
  const double om = 1.0 - g;
  return std::pow(2.0 * (1.0 + g) * om * om * (2.0 - g) / (g * (4.0 * g * g - 1.0)), 0.25);
}

dirac::DispersionReport quadrature_oracle(const CoulombState& state, const quadrature::QuadConfig& cfg) {
  const double g = state.gamma_c;
  require_finite_dispersion(g);
  if (!(g < 1.0)) throw DomainError("quadrature_oracle: gamma_c = 1 is not normalizable in Compton units");

  const auto psi_cart = [&](const Eigen::Vector3d& x) {
    const double r = x.norm();
    return ground_bispinor(state, r, std::acos(std::clamp(x.z() / r, -1.0, 1.0)), std::atan2(x.y(), x.x()));
  };

  // r = t^k maps the r^{2g-2} endpoint behaviour of |grad psi|^2 r^2 to a
  // bounded integrand in t.
  const double k = 1.0 / (2.0 * g - 1.0);
  constexpr int kPhi = 8;
  constexpr int kDim = 9;
  const quadrature::Integrand2dN integrand = [&](double t, double theta) -> Eigen::VectorXd {
    Eigen::VectorXd acc = Eigen::VectorXd::Zero(kDim);
    if (t <= 0.0) return acc;
    const double r = std::pow(t, k);
    const double dr_dt = k * std::pow(t, k - 1.0);
    const double st = std::sin(theta), ct = std::cos(theta);
    const double jac = r * r * st * dr_dt;
    const double step = 1e-4 * r;
    for (int m = 0; m < kPhi; ++m) {
      const double phi = 2.0 * std::numbers::pi * m / kPhi;
      const Eigen::Vector3d x(r * st * std::cos(phi), r * st * std::sin(phi), r * ct);
      const dirac::Bispinor psi = psi_cart(x);
      dirac::BispinorGradient grad;
      for (int axis = 0; axis < 3; ++axis) {
        Eigen::Vector3d e = Eigen::Vector3d::Zero();
        e[axis] = step;
        const dirac::Bispinor coarse = (psi_cart(x + e) - psi_cart(x - e)) / (2.0 * step);
        const dirac::Bispinor fine = (psi_cart(x + 0.5 * e) - psi_cart(x - 0.5 * e)) / step;
        grad.col(axis) = (4.0 * fine - coarse) / 3.0;
      }
      const double dens = psi.squaredNorm();
      acc[0] += dens * jac;
      acc.segment<3>(1) += x * dens * jac;
      acc[4] += r * r * dens * jac;
      acc[5] += grad.squaredNorm() * jac;
      // <p> = integral psi^dag (-i grad) psi
      const Eigen::Vector3cd mom = (C(0.0, -1.0) * (psi.adjoint() * grad)).transpose();
      acc.segment<3>(6) += mom.real() * jac;
    }
    return acc * (2.0 * std::numbers::pi / kPhi);
  };

  quadrature::QuadConfig c = cfg;
  c.decay_scale = std::pow(1.0 / state.decay(), 1.0 / k);
  const quadrature::QuadResultN res = quadrature::integrate_2d(integrand, kDim, c);
  const Eigen::VectorXd& v = res.value;
  return dirac::make_report(v[0], v.segment<3>(6), v[5], v.segment<3>(1), v[4]);
}

std::int64_t max_z_finite(double alpha) {
  const double limit = std::sqrt(3.0) / (2.0 * alpha);
  if (!(alpha > 0.0) || !std::isfinite(limit) || limit >= 9.0e18) return kUnboundedZ;
  auto z = static_cast<std::int64_t>(std::floor(limit));
  // strict inequality alpha Z < sqrt(3)/2
  while (z > 0 && !(alpha * static_cast<double>(z) < std::sqrt(3.0) / 2.0)) --z;
  return z;
}

}  // namespace relhur::hydrogen
