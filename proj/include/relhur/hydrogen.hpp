#pragma once

// Dirac ground state of a hydrogen-like ion, lengths in Compton units
// (hbar / m c = 1). gamma_c = sqrt(1 - (alpha Z)^2) is the hydrogenic
// exponent, not the uncertainty product.

#include <cstdint>
#include <limits>

#include "relhur/dirac_states.hpp"
#include "relhur/quadrature.hpp"

namespace relhur::hydrogen {

inline constexpr double kAlphaCodata2018 = 7.2973525693e-3;

struct CoulombState {
  int Z = 0;  // 0 when built directly from gamma_c
  double alpha = kAlphaCodata2018;
  double gamma_c = 1.0;

  static CoulombState from_z(int Z, double alpha = kAlphaCodata2018);
  static CoulombState from_gamma(double gamma_c);

  /// Decay constant sqrt(1 - gamma_c^2) of the radial factor.
  double decay() const;
  /// sqrt((1 - gamma_c) / (1 + gamma_c)), weight of the lower components.
  double small_component() const;
  /// N_G.
  double normalization() const;
};

/// N_G r^{g-1} e^{-sqrt(1-g^2) r} [1, 0, i k cos(theta), -i k e^{i phi} sin(theta)]
/// at t = 0, with k = small_component().
dirac::Bispinor ground_bispinor(const CoulombState& state, double r, double theta, double phi);

/// sqrt((g^2 + 5g + 2 - g^3) / (2g(2g - 1))), the closed form as published.
double uncertainty_product_closed(const CoulombState& state);

/// dr^2 and dp^2 from the Gamma-function moments of the ground state:
///   dr^2 = (2g + 1) / (2(1 - g)),  dp^2 = (1 - g^2)(2 - g) / (g(2g - 1)).
struct ClosedMoments {
  double delta_r_sq;
  double delta_p_sq;
  double gamma;
};
ClosedMoments closed_moments(const CoulombState& state);

/// (2(1+g)(1-g)^2(2-g) / (g(4g^2-1)))^{1/4}
double d_parameter(const CoulombState& state);

/// Dispersions by direct quadrature of the bispinor and its numerically
/// differentiated gradient in position space.
dirac::DispersionReport quadrature_oracle(const CoulombState& state, const quadrature::QuadConfig& cfg = {});

inline constexpr std::int64_t kUnboundedZ = std::numeric_limits<std::int64_t>::max();

/// Largest Z with sqrt(1 - alpha^2 Z^2) > 1/2; kUnboundedZ when alpha -> 0.
std::int64_t max_z_finite(double alpha);

}  // namespace relhur::hydrogen
