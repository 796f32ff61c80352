#include "relhur/radial_eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace relhur::radial {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct GradedGrid {
  double q_max;
  double beta;
  double norm;  // e^beta - 1

  GradedGrid(double q_max_, double beta_) : q_max(q_max_), beta(beta_), norm(std::expm1(beta_)) {}
  double q(double x) const { return q_max * std::expm1(beta * x) / norm; }
  double jacobian(double x) const { return q_max * beta * std::exp(beta * x) / norm; }
};

struct Tridiagonal {
  Eigen::VectorXd diag;
  Eigen::VectorXd off;  // off[i] couples i and i + 1
  Eigen::VectorXd mass;
  Eigen::VectorXd centres;
  Eigen::VectorXd dq;
};

// Symmetric tridiagonal form M^{-1/2} K M^{-1/2} of the finite-volume
// discretization of -(w g')'/w + W g = lambda g with w = q^{2s+2}.
Tridiagonal assemble(const RadialPotential& pot, double s, const GradedGrid& grid, int n) {
  const double h = 1.0 / n;
  const double power = 2.0 * s + 2.0;
  Tridiagonal t;
  t.diag.resize(n);
  t.off.resize(n - 1);
  t.mass.resize(n);
  t.centres.resize(n);
  t.dq.resize(n);

  Eigen::VectorXd face(n);  // w/J at face (i+1) h; the last one is the outer wall
  for (int i = 0; i < n; ++i) {
    const double xf = (i + 1) * h;
    face[i] = std::pow(grid.q(xf), power) / grid.jacobian(xf);
  }
  for (int i = 0; i < n; ++i) {
    const double x = (i + 0.5) * h;
    const double q = grid.q(x);
    const double jac = grid.jacobian(x);
    t.centres[i] = q;
    t.dq[i] = jac * h;
    t.mass[i] = std::pow(q, power) * jac * h;
  }
  for (int i = 0; i < n; ++i) {
    const double left = (i == 0) ? 0.0 : face[i - 1] / h;
    // Dirichlet wall at q_max sits half a cell away from the last centre.
    const double right = (i == n - 1) ? 2.0 * face[i] / h : face[i] / h;
    const double stiff = left + right + pot.regular(t.centres[i]) * t.mass[i];
    t.diag[i] = stiff / t.mass[i];
    if (i + 1 < n) t.off[i] = -(face[i] / h) / std::sqrt(t.mass[i] * t.mass[i + 1]);
  }
  return t;
}

int count_below(const Tridiagonal& t, double x) {
  const Eigen::Index n = t.diag.size();
  int count = 0;
  double d = t.diag[0] - x;
  if (d < 0.0) ++count;
  for (Eigen::Index i = 1; i < n; ++i) {
    if (d == 0.0) d = kEps * (std::abs(t.off[i - 1]) + kEps);
    d = t.diag[i] - x - t.off[i - 1] * t.off[i - 1] / d;
    if (d < 0.0) ++count;
  }
  return count;
}

double lowest_by_bisection(const Tridiagonal& t) {
  const Eigen::Index n = t.diag.size();
  double lo = std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < n; ++i) {
    const double radius = (i > 0 ? std::abs(t.off[i - 1]) : 0.0) + (i + 1 < n ? std::abs(t.off[i]) : 0.0);
    lo = std::min(lo, t.diag[i] - radius);
    hi = std::min(hi, t.diag[i]);
  }
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (count_below(t, mid) >= 1) {
      hi = mid;
    } else {
      lo = mid;
    }
    if (hi - lo <= 2.0 * kEps * std::max(std::abs(lo), std::abs(hi))) break;
  }
  return 0.5 * (lo + hi);
}

// Inverse iteration just below the lowest eigenvalue. T - sigma I is then a
// positive-definite M-matrix, so elimination without pivoting is stable and
// the iterate stays positive.
Eigen::VectorXd lowest_vector(const Tridiagonal& t, double lambda) {
  const Eigen::Index n = t.diag.size();
  const double sigma = lambda - 1e-9 * std::max(1.0, std::abs(lambda));
  Eigen::VectorXd y = Eigen::VectorXd::Ones(n);
  Eigen::VectorXd c(n), d(n);
  for (int it = 0; it < 3; ++it) {
    // Thomas algorithm on (T - sigma I) z = y
    double denom = t.diag[0] - sigma;
    c[0] = (n > 1 ? t.off[0] : 0.0) / denom;
    d[0] = y[0] / denom;
    for (Eigen::Index i = 1; i < n; ++i) {
      denom = t.diag[i] - sigma - t.off[i - 1] * c[i - 1];
      c[i] = (i + 1 < n ? t.off[i] : 0.0) / denom;
      d[i] = (y[i] - t.off[i - 1] * d[i - 1]) / denom;
    }
    y[n - 1] = d[n - 1];
    for (Eigen::Index i = n - 2; i >= 0; --i) y[i] = d[i] - c[i] * y[i + 1];
    y /= y.norm();
  }
  return y;
}

struct Level {
  double gamma;
  Tridiagonal matrix;
};

Level solve_level(const RadialPotential& pot, double s, const GradedGrid& grid, int n) {
  Tridiagonal t = assemble(pot, s, grid, n);
  const double lambda = lowest_by_bisection(t);
  return {0.5 * lambda, std::move(t)};
}

void validate(const RadialPotential& pot, double q_max, int n, double tol) {
  if (!pot.evaluate) throw DomainError("ground_state: potential has no evaluator");
  if (pot.singular_strength < -0.25) {
    throw DomainError("ground_state: singular_strength < -1/4, operator unbounded below");
  }
  if (!(q_max > 0.0)) throw DomainError("ground_state: q_max must be positive");
  if (n < 200) throw DomainError("ground_state: need at least 200 grid cells");
  if (!(tol > 0.0)) throw DomainError("ground_state: tol must be positive");
}

}  // namespace

double RadialPotential::regular(double q) const {
  if (regular_part) return regular_part(q);
  return evaluate(q) - singular_strength / (q * q);
}

double RadialPotential::origin_exponent() const { return 0.5 * (-1.0 + std::sqrt(1.0 + 4.0 * singular_strength)); }

double ground_state_single_level(const RadialPotential& pot, double q_max, int n, double grading) {
  validate(pot, q_max, n, 1.0);
  return solve_level(pot, pot.origin_exponent(), GradedGrid(q_max, grading), n).gamma;
}

EigenResult ground_state(const RadialPotential& pot, const SolverOptions& opts) {
  validate(pot, opts.q_max, opts.n, opts.tol);
  const double s = pot.origin_exponent();
  const GradedGrid grid(opts.q_max, opts.grading);

  int n = opts.n;
  double g0 = solve_level(pot, s, grid, n).gamma;
  double g1 = solve_level(pot, s, grid, 2 * n).gamma;
  Level finest = solve_level(pot, s, grid, 4 * n);
  double g2 = finest.gamma;

  double r1 = (4.0 * g1 - g0) / 3.0;
  double r2 = (4.0 * g2 - g1) / 3.0;
  double err = std::abs(r2 - r1);
  int doublings = 0;
  while (err > opts.tol && doublings < opts.max_doublings) {
    n *= 2;
    ++doublings;
    g0 = g1;
    g1 = g2;
    finest = solve_level(pot, s, grid, 4 * n);
    g2 = finest.gamma;
    r1 = (4.0 * g1 - g0) / 3.0;
    r2 = (4.0 * g2 - g1) / 3.0;
    err = std::abs(r2 - r1);
  }
  if (err > opts.tol) {
    throw NonConvergence("radial_eigensolver: grid refinement did not reach tol " + std::to_string(opts.tol), r2, err);
  }
  if (!std::isfinite(r2) || !(r2 > 0.0)) {
    throw NonConvergence("radial_eigensolver: non-positive or non-finite eigenvalue", r2, err);
  }
  if (pot.evaluate(opts.q_max) < 4.0 * r2) {
    throw DomainError("ground_state: q_max too small, V(q_max) < 4 gamma");
  }

  const Tridiagonal& t = finest.matrix;
  const Eigen::VectorXd y = lowest_vector(t, 2.0 * finest.gamma);
  // y = M^{1/2} g with sum y^2 = 1, which is the discrete normalization.
  Eigen::VectorXd f(y.size());
  for (Eigen::Index i = 0; i < y.size(); ++i) {
    f[i] = y[i] / std::sqrt(t.mass[i]) * std::pow(t.centres[i], s);
  }

  EigenResult res;
  res.gamma = r2;
  res.grid = t.centres;
  res.f_values = f;
  res.weights = t.dq;
  res.diagnostics = {static_cast<int>(t.diag.size()), opts.q_max, err, doublings};
  return res;
}

EigenResult ground_state(const RadialPotential& pot, double q_max, int n, double tol) {
  SolverOptions opts;
  opts.q_max = q_max;
  opts.n = n;
  opts.tol = tol;
  return ground_state(pot, opts);
}

double moment(const EigenResult& res, const std::function<double(double)>& weight) {
  // q^2 weight(q) must stay bounded as q -> 0.
  const double near = 1e-4 * res.diagnostics.q_max;
  const double nearer = 1e-6 * res.diagnostics.q_max;
  const double a = std::abs(weight(near)) * near * near;
  const double b = std::abs(weight(nearer)) * nearer * nearer;
  if (!std::isfinite(b) || b > 1.5 * a + 1e-300) {
    throw DomainError("moment: weight more singular than 1/q^2 at the origin");
  }
  double sum = 0.0;
  for (Eigen::Index i = 0; i < res.grid.size(); ++i) {
    const double q = res.grid[i];
    sum += weight(q) * res.f_values[i] * res.f_values[i] * q * q * res.weights[i];
  }
  return sum;
}

double rayleigh_quotient(const RadialPotential& pot, const EigenResult& res) {
  const Eigen::VectorXd& q = res.grid;
  const Eigen::VectorXd& f = res.f_values;
  double kinetic = 0.0;
  double potential = 0.0;
  double norm = 0.0;
  for (Eigen::Index i = 0; i < q.size(); ++i) {
    const double w = q[i] * q[i] * res.weights[i];
    potential += pot.evaluate(q[i]) * f[i] * f[i] * w;
    norm += f[i] * f[i] * w;
    if (i + 1 < q.size()) {
      const double dq = q[i + 1] - q[i];
      const double qf = 0.5 * (q[i] + q[i + 1]);
      const double df = (f[i + 1] - f[i]) / dq;
      kinetic += df * df * qf * qf * dq;
    }
  }
  return 0.5 * (kinetic + potential) / norm;
}

int interior_nodes(const EigenResult& res) {
  int nodes = 0;
  double last = 0.0;
  for (Eigen::Index i = 0; i < res.f_values.size(); ++i) {
    const double v = res.f_values[i];
    if (v == 0.0) continue;
    if (last != 0.0 && (v > 0.0) != (last > 0.0)) ++nodes;
    last = v;
  }
  return nodes;
}

}  // namespace relhur::radial
