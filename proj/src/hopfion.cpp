#include "relhur/hopfion.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "relhur/parallel.hpp"
#include "relhur/specfun.hpp"

namespace relhur::hopfion {

namespace {

using C = std::complex<double>;

// E - 1 without cancellation.
double kinetic(double p2, double energy) { return p2 / (energy + 1.0); }

void check_range(double a) {
  if (!(a >= 0.05 && a <= 100.0)) throw DomainError("hopfion: a outside [0.05, 100]");
}

// e^{a} Psi(p) at a Cartesian point.
dirac::Bispinor scaled_bispinor(const HopfionState& state, const Eigen::Vector3d& p) {
  const double p2 = p.squaredNorm();
  const double energy = std::sqrt(1.0 + p2);
  const double w = std::exp(-state.a * kinetic(p2, energy)) / energy;
  dirac::Bispinor psi;
  psi << C(1.0), C(0.0), C(energy - p.z()), -C(p.x(), p.y());
  return psi * w;
}

}  // namespace

HopfionState::HopfionState(double a_) : a(a_) {
  if (!(a > 0.0) || !std::isfinite(a)) throw DomainError("HopfionState: a must be positive");
}

double momentum_scale(const HopfionState& state) { return std::max(1.0 / state.a, 1.0 / std::sqrt(state.a)); }

dirac::Bispinor momentum_bispinor(const HopfionState& state, const dirac::MomentumPoint& pt) {
  return scaled_bispinor(state, pt.cartesian()) * std::exp(-state.a);
}

double density(const HopfionState& state, const dirac::MomentumPoint& pt) {
  const double energy = pt.energy();
  return 2.0 * std::exp(-2.0 * state.a * energy) * (energy - pt.p * std::cos(pt.theta)) / energy;
}

dirac::BispinorGradient scaled_gradient(const HopfionState& state, const Eigen::Vector3d& p) {
  const double p2 = p.squaredNorm();
  const double energy = std::sqrt(1.0 + p2);
  const double w = std::exp(-state.a * kinetic(p2, energy)) / energy;
  // grad w = w (-(a + 1/E) / E) p
  const double g = -(state.a + 1.0 / energy) / energy;
  const C perp(p.x(), p.y());
  dirac::BispinorGradient grad;
  for (int i = 0; i < 3; ++i) {
    const double dw = w * g * p[i];
    const double de = p[i] / energy;
    const double dz = (i == 2) ? 1.0 : 0.0;
    const C dperp = (i == 0) ? C(1.0) : (i == 1 ? C(0.0, 1.0) : C(0.0));
    grad(0, i) = dw;
    grad(1, i) = 0.0;
    grad(2, i) = dw * (energy - p.z()) + w * (de - dz);
    grad(3, i) = -(dw * perp + w * dperp);
  }
  return grad;
}

NormResult norm_const(const HopfionState& state, const quadrature::QuadConfig& cfg) {
  quadrature::QuadConfig c = cfg;
  c.decay_scale = momentum_scale(state);
  // phi-independent, so the azimuth contributes 2 pi
  const quadrature::Integrand2d f = [&](double p, double theta) {
    const dirac::MomentumPoint pt{p, theta, 0.0};
    const double dens = scaled_bispinor(state, pt.cartesian()).squaredNorm();
    return 2.0 * std::numbers::pi * dens * p * p * std::sin(theta);
  };
  const quadrature::QuadResult r = quadrature::integrate_2d(f, c);
  const double two_a = 2.0 * state.a;
  const double k2_scaled = specfun::bessel_k_scaled(2, two_a) / state.a;  // e^{2a} K_2(2a) / a
  NormResult out;
  out.ratio = r.value / k2_scaled;
  out.value = r.value * std::exp(-two_a);
  out.est_abs_error = r.est_abs_error * std::exp(-two_a);
  out.k2_form = k2_scaled * std::exp(-two_a);
  return out;
}

HopfionDispersion gamma_h_detailed(const HopfionState& state, const quadrature::QuadConfig& cfg) {
  check_range(state.a);
  constexpr int kPhi = 8;
  constexpr int kDim = 9;
  const quadrature::Integrand2dN integrand = [&](double p, double theta) -> Eigen::VectorXd {
    Eigen::VectorXd acc = Eigen::VectorXd::Zero(kDim);
    const double st = std::sin(theta), ct = std::cos(theta);
    const double jac = p * p * st;
    for (int m = 0; m < kPhi; ++m) {
      const double phi = 2.0 * std::numbers::pi * m / kPhi;
      const Eigen::Vector3d pv(p * st * std::cos(phi), p * st * std::sin(phi), p * ct);
      const dirac::Bispinor psi = scaled_bispinor(state, pv);
      const dirac::BispinorGradient grad = scaled_gradient(state, pv);
      const double dens = psi.squaredNorm();
      acc[0] += dens * jac;
      acc.segment<3>(1) += pv * dens * jac;
      acc[4] += p * p * dens * jac;
      acc[5] += grad.squaredNorm() * jac;
      // <r> = integral Psi^dag i grad_p Psi
      const Eigen::Vector3cd first = (C(0.0, 1.0) * (psi.adjoint() * grad)).transpose();
      acc.segment<3>(6) += first.real() * jac;
    }
    return acc * (2.0 * std::numbers::pi / kPhi);
  };
  quadrature::QuadConfig c = cfg;
  c.decay_scale = momentum_scale(state);
  const quadrature::QuadResultN r = quadrature::integrate_2d(integrand, kDim, c);
  const Eigen::VectorXd& v = r.value;
  HopfionDispersion out;
  out.report = dirac::make_report(v[0], v.segment<3>(1), v[4], v.segment<3>(6), v[5]);
  out.report.norm_sq *= std::exp(-2.0 * state.a);  // undo the e^{a} scaling
  const Eigen::VectorXd rel = r.est_abs_error.cwiseQuotient(v.cwiseAbs().cwiseMax(1e-300));
  out.err_est = out.report.gamma * (rel[0] + 0.5 * (rel[4] + rel[5]));
  return out;
}

dirac::DispersionReport gamma_h(const HopfionState& state, const quadrature::QuadConfig& cfg) {
  return gamma_h_detailed(state, cfg).report;
}

SweepTable gamma_h_curve(std::span<const double> a_values, const quadrature::QuadConfig& cfg) {
  for (std::size_t i = 0; i < a_values.size(); ++i) {
    check_range(a_values[i]);
    if (i > 0 && !(a_values[i] > a_values[i - 1])) throw DomainError("gamma_h_curve: a values must ascend");
  }
  SweepTable table;
  table.param_name = "a";
  table.metadata["gamma_limit_a_to_inf"] = 1.5;
  table.rows = parallel_map(a_values.size(), [&](std::size_t i) {
    const HopfionDispersion d = gamma_h_detailed(HopfionState(a_values[i]), cfg);
    return SweepRow{a_values[i], false, d.report.gamma, d.err_est};
  });
  return table;
}

dirac::AmplitudePair spin_amplitudes(const HopfionState& state) {
  // f_s = u_s^dag Psi and its spherical partials from the two Cartesian
  // gradients
  const auto value = [state](dirac::Spin s) -> dirac::Amplitude {
    return [state, s](double p, double theta, double phi) -> C {
      const Eigen::Vector3d pv = dirac::MomentumPoint{p, theta, phi}.cartesian();
      return dirac::bispinor_u<double>(pv, s, 1.0).dot(scaled_bispinor(state, pv));
    };
  };
  enum Axis { kP, kTheta, kPhi };
  const auto partial = [state](dirac::Spin s, Axis axis) -> dirac::Amplitude {
    return [state, s, axis](double p, double theta, double phi) -> C {
      const Eigen::Vector3d pv = dirac::MomentumPoint{p, theta, phi}.cartesian();
      const dirac::Bispinor u = dirac::bispinor_u<double>(pv, s, 1.0);
      const Eigen::Vector3cd grad = dirac::bispinor_u_gradient(pv, s, 1.0).adjoint() * scaled_bispinor(state, pv) +
                                    scaled_gradient(state, pv).transpose() * u.conjugate();
      const double st = std::sin(theta), ct = std::cos(theta);
      const double sp = std::sin(phi), cp = std::cos(phi);
      Eigen::Vector3d dir = Eigen::Vector3d::Zero();
      double len = 1.0;
      switch (axis) {
        case kP: dir << st * cp, st * sp, ct; break;
        case kTheta: dir << ct * cp, ct * sp, -st; len = p; break;
        case kPhi: dir << -sp, cp, 0.0; len = p * st; break;
      }
      return len * (grad(0) * dir(0) + grad(1) * dir(1) + grad(2) * dir(2));
    };
  };
  const auto partials = [&](dirac::Spin s) {
    return dirac::AmplitudePartials{partial(s, kP), partial(s, kTheta), partial(s, kPhi)};
  };
  dirac::AmplitudePair amp;
  amp.f_plus = value(dirac::Spin::Up);
  amp.f_minus = value(dirac::Spin::Down);
  amp.partials_plus = partials(dirac::Spin::Up);
  amp.partials_minus = partials(dirac::Spin::Down);
  return amp;
}

}  // namespace relhur::hopfion
