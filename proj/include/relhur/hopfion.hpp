#pragma once

// Dirac hopfion in momentum space (m = 1):
//
//   Psi(p) = e^{-a E} / E * [1, 0, E - p_z, -(p_x + i p_y)],  E = sqrt(1 + p^2).
//
// All integrals are done with e^{-a} factored out of Psi so that large a does
// not underflow; ratios are unaffected.

#include <span>

#include "relhur/dirac_states.hpp"
#include "relhur/quadrature.hpp"
#include "relhur/sweep_table.hpp"

namespace relhur::hopfion {

struct HopfionState {
  double a;

  explicit HopfionState(double a_);
};

/// Unnormalized Psi(p) at the given point.
dirac::Bispinor momentum_bispinor(const HopfionState& state, const dirac::MomentumPoint& pt);

/// |Psi|^2 = 2 e^{-2aE} (E - p_z) / E.
double density(const HopfionState& state, const dirac::MomentumPoint& pt);

/// Cartesian gradient of e^{a} Psi at Cartesian momentum p.
dirac::BispinorGradient scaled_gradient(const HopfionState& state, const Eigen::Vector3d& p);

struct NormResult {
  double value = 0.0;          // integral |Psi|^2 d^3p
  double est_abs_error = 0.0;
  double k2_form = 0.0;        // K_2(2a) / a
  double ratio = 0.0;          // value / k2_form
};

NormResult norm_const(const HopfionState& state, const quadrature::QuadConfig& cfg = {});

struct HopfionDispersion {
  dirac::DispersionReport report;
  double err_est = 0.0;  // on gamma
};

HopfionDispersion gamma_h_detailed(const HopfionState& state, const quadrature::QuadConfig& cfg = {});
dirac::DispersionReport gamma_h(const HopfionState& state, const quadrature::QuadConfig& cfg = {});

/// gamma_H(a) for ascending a in [0.05, 100]; rows in input order.
SweepTable gamma_h_curve(std::span<const double> a_values, const quadrature::QuadConfig& cfg = {});

/// Spin amplitudes f_s = u(p, s)^dag (e^{a} Psi(p)), so that the general
/// dispersion functional can be run on the hopfion.
dirac::AmplitudePair spin_amplitudes(const HopfionState& state);

/// Decay scale of the momentum profile used for the semi-infinite map.
double momentum_scale(const HopfionState& state);

}  // namespace relhur::hopfion
