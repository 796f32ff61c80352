#pragma once

// Adaptive Gauss-Kronrod (7/15) integration on finite intervals, on
// [0, inf) through the map x = s t / (1 - t), and over the half-strip
// (p, theta) in [0, inf) x [0, pi] as a nested tensor-product rule.
//
// Every routine has a vector-valued form: all components share the same
// panel refinement and are converged jointly, which is how the dispersion
// code evaluates several moments in one pass.

#include <Eigen/Core>
#include <functional>

#include "relhur/errors.hpp"

namespace relhur::quadrature {

struct QuadConfig {
  double abs_tol = 1e-10;
  double rel_tol = 1e-9;
  int max_subdivisions = 4000;
  // Characteristic length of the integrand's decay, in units of the
  // integration variable. Only used by the semi-infinite map.
  double decay_scale = 1.0;

  void validate() const;
  QuadConfig tightened(double factor) const;
};

struct QuadResult {
  double value = 0.0;
  double est_abs_error = 0.0;
  long evaluations = 0;
};

struct QuadResultN {
  Eigen::VectorXd value;
  Eigen::VectorXd est_abs_error;
  long evaluations = 0;
};

using Integrand = std::function<double(double)>;
using IntegrandN = std::function<Eigen::VectorXd(double)>;
using Integrand2d = std::function<double(double, double)>;
using Integrand2dN = std::function<Eigen::VectorXd(double, double)>;

QuadResult integrate_finite(const Integrand& f, double a, double b, const QuadConfig& cfg = {});
QuadResultN integrate_finite(const IntegrandN& f, int dim, double a, double b, const QuadConfig& cfg = {});

QuadResult integrate_semi_infinite(const Integrand& f, const QuadConfig& cfg = {});
QuadResultN integrate_semi_infinite(const IntegrandN& f, int dim, const QuadConfig& cfg = {});

/// Integral of f(p, theta) over p in [0, inf), theta in [0, pi]. No
/// sin(theta) or p^2 Jacobian is applied; the caller folds it into f.
QuadResult integrate_2d(const Integrand2d& f, const QuadConfig& cfg = {});
QuadResultN integrate_2d(const Integrand2dN& f, int dim, const QuadConfig& cfg = {});

}  // namespace relhur::quadrature
