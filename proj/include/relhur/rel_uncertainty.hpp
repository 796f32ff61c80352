#pragma once

// Lower bound gamma(d) on sqrt(dr^2 dp^2)/hbar for positive-energy Dirac
// electrons, as the ground-state eigenvalue of the radial operator
//
//   (1/2) [ -d^2/dq^2 - (2/q) d/dq + V(q; d) ]
//
// with the modified oscillator potential
//
//   V(q; d) = 1/q^2 - 1/(q^2 sqrt(1 + d^2 q^2)) + d^2/(4 (1 + d^2 q^2)^2) + q^2 .
//
// d = 0 is the nonrelativistic oscillator (gamma = 3/2); d = infinity keeps a
// 1/q^2 core (gamma = 1 + sqrt(5)/2).

#include <cmath>
#include <limits>
#include <span>
#include <vector>

#include "relhur/errors.hpp"
#include "relhur/radial_eigensolver.hpp"

namespace relhur::rel {

/// Dimensionless scale d = (hbar^2 dp^2 / dr^2)^{1/4} / (m c); either a
/// finite non-negative number or the ultrarelativistic limit.
class RelativisticScale {
 public:
  static RelativisticScale finite(double d) {
    if (!(d >= 0.0) || !std::isfinite(d)) throw DomainError("RelativisticScale: d must be finite and >= 0");
    return RelativisticScale(d, false);
  }
  static RelativisticScale infinity() { return RelativisticScale(0.0, true); }

  bool is_infinite() const { return infinite_; }
  double value() const { return infinite_ ? std::numeric_limits<double>::infinity() : d_; }

  friend bool operator<(const RelativisticScale& l, const RelativisticScale& r) {
    if (l.infinite_) return false;
    if (r.infinite_) return true;
    return l.d_ < r.d_;
  }

 private:
  RelativisticScale(double d, bool inf) : d_(d), infinite_(inf) {}
  double d_;
  bool infinite_;
};

inline constexpr double kGammaNonrelativistic = 1.5;
inline const double kGammaUltrarelativistic = 1.0 + std::sqrt(5.0) / 2.0;

/// Regular part V(q; d) - c/q^2, free of cancellation near q = 0.
template <typename Scalar>
Scalar potential_regular(Scalar q, const RelativisticScale& d) {
  using std::sqrt;
  if (d.is_infinite()) return q * q;
  const Scalar dd = static_cast<Scalar>(d.value());
  const Scalar x = dd * dd * q * q;
  const Scalar root = sqrt(Scalar(1) + x);
  // 1/q^2 - 1/(q^2 root) = d^2 / (root (1 + root))
  const Scalar core = dd * dd / (root * (Scalar(1) + root));
  const Scalar bump = dd * dd / (Scalar(4) * (Scalar(1) + x) * (Scalar(1) + x));
  return core + bump + q * q;
}

template <typename Scalar>
Scalar potential_v(Scalar q, const RelativisticScale& d) {
  if (!(q > Scalar(0))) throw DomainError("potential_v: q must be positive");
  if (d.is_infinite()) return Scalar(1) / (q * q) + q * q;
  return potential_regular(q, d);
}

double singular_strength(const RelativisticScale& d);

radial::RadialPotential relativistic_potential(const RelativisticScale& d);

/// Full eigen-solution for one d; q_max, n and grading from `opts`.
radial::EigenResult solve_bound(const RelativisticScale& d, double tol = 1e-7);

double gamma_bound(const RelativisticScale& d, double tol = 1e-7);

struct BoundRow {
  RelativisticScale d;
  double gamma;
  double err_est;
};

struct BoundCurve {
  std::vector<BoundRow> rows;
  double gamma_at_0 = kGammaNonrelativistic;
  double gamma_at_inf = kGammaUltrarelativistic;

  bool strictly_increasing() const;
};

/// gamma(d) for each d (sorted ascending). Points are solved concurrently;
/// row order follows the input.
BoundCurve sweep(std::span<const RelativisticScale> d_values, double tol = 1e-7);

/// Max over q in [q_lo, q_hi] of |(1/2)(-f'' - (2/q) f' + q^2 f) - eigenvalue f|
/// for the Gaussian f = exp(-width q^2 / 2).
double oscillator_residual(double width, double eigenvalue, double q_lo = 0.01, double q_hi = 8.0);

/// Residual of the oscillator ground state exp(-q^2/2) against eigenvalue
/// gamma0 in the d = 0 equation. Vanishes only for gamma0 = 3/2.
double gaussian_limit_residual(double gamma0);

/// Residual of q^{(sqrt5-1)/2} exp(-q^2/2) against eigenvalue gamma in the
/// d = infinity equation (with its 1/q^2 term).
double ultrarelativistic_residual(double gamma, double q_lo = 0.01, double q_hi = 8.0);

/// Diagnostics of one solution: <q^2>, the remaining (kinetic + V - q^2)
/// part, and the dispersion ratio d' = (<q^2> / <kin + V - q^2>)^{1/4} * d
/// the eigenfunction itself would imply. Reported, not enforced.
struct BalanceReport {
  double q2;
  double rest;
  double implied_d;
};
BalanceReport virial_balance(const RelativisticScale& d, const radial::EigenResult& res);

}  // namespace relhur::rel
