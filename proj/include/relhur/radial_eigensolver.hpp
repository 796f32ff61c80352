#pragma once

// Ground state of the radial operator
//
//     (1/2) [ -f'' - (2/q) f' + V(q) f ] = gamma f,   q in (0, inf),
//
// for confining potentials V(q) ~ q^2 at large q that may carry a
// centrifugal-type singularity c / q^2 at the origin.
//
// The solver factors out the exact small-q behaviour f = q^s g with
// s (s + 1) = c, which turns the problem into a smooth radial equation for
// g with weight q^(2s+2). That equation is discretized with a cell-centred
// finite-volume scheme on an exponentially graded grid, reduced to a
// symmetric tridiagonal matrix and solved by Sturm-sequence bisection. Three
// grid levels are Richardson-extrapolated in the grid spacing.

#include <Eigen/Core>
#include <functional>

#include "relhur/errors.hpp"

namespace relhur::radial {

struct RadialPotential {
  std::function<double(double)> evaluate;
  // Coefficient c of the 1/q^2 term as q -> 0.
  double singular_strength = 0.0;
  // Optional V(q) - c/q^2, evaluated without cancellation. Derived from
  // `evaluate` when empty.
  std::function<double(double)> regular_part;

  double operator()(double q) const { return evaluate(q); }
  double regular(double q) const;
  /// Exponent s >= -1/2 of the small-q power law f ~ q^s.
  double origin_exponent() const;
};

struct EigenDiagnostics {
  int grid_size = 0;  // cells on the finest level
  double q_max = 0.0;
  double est_error = 0.0;
  int doublings = 0;
};

struct EigenResult {
  double gamma = 0.0;
  Eigen::VectorXd grid;      // cell centres q_i
  Eigen::VectorXd f_values;  // f(q_i), sum f^2 q^2 dq = 1
  Eigen::VectorXd weights;   // dq_i of the midpoint rule on the graded grid
  EigenDiagnostics diagnostics;
};

struct SolverOptions {
  double q_max = 10.0;
  int n = 4000;
  double tol = 1e-7;
  // Grid grading: q(x) = q_max (e^{beta x} - 1)/(e^beta - 1), x in [0, 1].
  double grading = 6.0;
  int max_doublings = 5;
};

EigenResult ground_state(const RadialPotential& pot, const SolverOptions& opts);
EigenResult ground_state(const RadialPotential& pot, double q_max = 10.0, int n = 4000, double tol = 1e-7);

/// Lowest eigenvalue gamma on a single grid level, without extrapolation.
double ground_state_single_level(const RadialPotential& pot, double q_max, int n, double grading = 6.0);

/// Integral of weight(q) f(q)^2 q^2 dq over the stored grid.
double moment(const EigenResult& res, const std::function<double(double)>& weight);

/// (1/2) [<|f'|^2> + <V f^2>] / <f^2> on the stored grid, measure q^2 dq.
double rayleigh_quotient(const RadialPotential& pot, const EigenResult& res);

/// Number of sign changes of the stored eigenfunction.
int interior_nodes(const EigenResult& res);

}  // namespace relhur::radial
