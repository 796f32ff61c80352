#pragma once

// Positive-energy Dirac states in momentum space, Weyl representation.
//
// A state is a pair of spin amplitudes f(p, theta, phi, s), s = +-, and the
// four-component momentum wave function is Phi(p) = sum_s u(p, s) f(p, s).
// Units: hbar = c = 1; momenta in units of m c when m = 1.

#include <Eigen/Core>
#include <cmath>
#include <complex>
#include <functional>
#include <optional>

#include "relhur/quadrature.hpp"

namespace relhur::dirac {

template <typename Scalar>
using BispinorT = Eigen::Matrix<std::complex<Scalar>, 4, 1>;
using Bispinor = BispinorT<double>;
// Columns are d/dp_x, d/dp_y, d/dp_z of the four components.
using BispinorGradient = Eigen::Matrix<std::complex<double>, 4, 3>;

enum class Spin : int { Up = 1, Down = -1 };

inline int sign(Spin s) { return static_cast<int>(s); }

struct MomentumPoint {
  double p = 0.0;
  double theta = 0.0;
  double phi = 0.0;

  Eigen::Vector3d cartesian() const {
    const double st = std::sin(theta);
    return {p * st * std::cos(phi), p * st * std::sin(phi), p * std::cos(theta)};
  }
  double energy(double mass = 1.0) const { return std::sqrt(mass * mass + p * p); }
};

/// u(p, s) = [m+E+p_z, p_x+ip_y, m+E-p_z, -p_x-ip_y] / sqrt(4E(E+m)) for s = +,
/// u(p, s) = [p_x-ip_y, m+E-p_z, -p_x+ip_y, m+E+p_z] / sqrt(4E(E+m)) for s = -.
template <typename Scalar>
BispinorT<Scalar> bispinor_u(const Eigen::Matrix<Scalar, 3, 1>& p, Spin s, Scalar mass) {
  using C = std::complex<Scalar>;
  using std::sqrt;
  const Scalar energy = sqrt(mass * mass + p.squaredNorm());
  const Scalar scale = Scalar(1) / sqrt(Scalar(4) * energy * (energy + mass));
  const Scalar me = mass + energy;
  const C perp_plus(p.x(), p.y());
  const C perp_minus(p.x(), -p.y());
  BispinorT<Scalar> u;
  if (s == Spin::Up) {
    u << C(me + p.z()), perp_plus, C(me - p.z()), -perp_plus;
  } else {
    u << perp_minus, C(me - p.z()), -perp_minus, C(me + p.z());
  }
  return u * scale;
}

Bispinor bispinor_u(const MomentumPoint& pt, Spin s, double mass = 1.0);

/// Cartesian momentum gradient of u(p, s); requires p != 0 when mass == 0.
BispinorGradient bispinor_u_gradient(const Eigen::Vector3d& p, Spin s, double mass = 1.0);

using Amplitude = std::function<std::complex<double>(double p, double theta, double phi)>;

struct AmplitudePartials {
  Amplitude d_p;
  Amplitude d_theta;
  Amplitude d_phi;
};

struct AmplitudePair {
  Amplitude f_plus;
  Amplitude f_minus;  // empty means identically zero
  std::optional<AmplitudePartials> partials_plus;
  std::optional<AmplitudePartials> partials_minus;
  // Both amplitudes independent of phi; lets the phi rule shrink.
  bool phi_independent = false;
};

struct DispersionReport {
  double norm_sq = 0.0;
  Eigen::Vector3d mean_r = Eigen::Vector3d::Zero();
  Eigen::Vector3d mean_p = Eigen::Vector3d::Zero();
  double delta_r_sq = 0.0;
  double delta_p_sq = 0.0;
  double gamma = 0.0;

  /// d = (dp^2 / dr^2)^{1/4} / m
  double d_parameter(double mass = 1.0) const { return std::pow(delta_p_sq / delta_r_sq, 0.25) / mass; }
};

/// Builds the report from raw integrals: norm, first and second moments.
DispersionReport make_report(double norm_sq, const Eigen::Vector3d& p_first, double p_second,
                             const Eigen::Vector3d& r_first, double r_second);

/// N^2, <p>, dp^2, <r>, dr^2 of the state. dr^2 uses the spherical-coordinate
/// form of <r^2> in terms of the amplitudes (gradient, Berry-connection and
/// spin-mixing terms); <r> uses i grad_p on Phi directly. Means are always
/// subtracted.
DispersionReport dispersion_functional(const AmplitudePair& amp, const quadrature::QuadConfig& cfg = {},
                                       double mass = 1.0);

/// <r> and <r^2> from integral |grad_p Phi|^2 with Phi assembled from the
/// bispinors. Independent of the amplitude-level functional above.
struct PositionMoments {
  double norm_sq = 0.0;
  Eigen::Vector3d mean_r = Eigen::Vector3d::Zero();
  double r_sq = 0.0;
};
PositionMoments position_moments_direct(const AmplitudePair& amp, const quadrature::QuadConfig& cfg = {},
                                        double mass = 1.0);

/// Amplitude and its three spherical partials at one point.
struct AmplitudeJet {
  std::complex<double> f;
  std::complex<double> d_p;
  std::complex<double> d_theta;
  std::complex<double> d_phi;
};

/// Analytic partials when supplied, otherwise central differences with
/// step max(1e-5, 1e-5 p) (at most p/2) and one Richardson step.
AmplitudeJet evaluate_jet(const Amplitude& f, const std::optional<AmplitudePartials>& partials, double p,
                          double theta, double phi);

}  // namespace relhur::dirac
