#include "relhur/rel_uncertainty.hpp"

#include <cmath>

#include "relhur/parallel.hpp"

namespace relhur::rel {

double singular_strength(const RelativisticScale& d) { return d.is_infinite() ? 1.0 : 0.0; }

radial::RadialPotential relativistic_potential(const RelativisticScale& d) {
  radial::RadialPotential pot;
  pot.evaluate = [d](double q) { return potential_v(q, d); };
  pot.regular_part = [d](double q) { return potential_regular(q, d); };
  pot.singular_strength = singular_strength(d);
  return pot;
}

radial::EigenResult solve_bound(const RelativisticScale& d, double tol) {
  if (!(tol >= 1e-8)) throw DomainError("gamma_bound: tol must be >= 1e-8");
  radial::SolverOptions opts;
  opts.tol = tol;
  return radial::ground_state(relativistic_potential(d), opts);
}

double gamma_bound(const RelativisticScale& d, double tol) { return solve_bound(d, tol).gamma; }

bool BoundCurve::strictly_increasing() const {
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (!(rows[i].gamma > rows[i - 1].gamma)) return false;
  }
  return true;
}

BoundCurve sweep(std::span<const RelativisticScale> d_values, double tol) {
  for (std::size_t i = 1; i < d_values.size(); ++i) {
    if (d_values[i] < d_values[i - 1]) throw DomainError("sweep: d values must be sorted ascending");
  }
  BoundCurve curve;
  curve.rows = parallel_map(d_values.size(), [&](std::size_t i) {
    const radial::EigenResult r = solve_bound(d_values[i], tol);
    return BoundRow{d_values[i], r.gamma, r.diagnostics.est_error};
  });
  return curve;
}

double oscillator_residual(double width, double eigenvalue, double q_lo, double q_hi) {
  constexpr int kSamples = 4000;
  double worst = 0.0;
  for (int i = 0; i <= kSamples; ++i) {
    const double q = q_lo + (q_hi - q_lo) * i / kSamples;
    const double f = std::exp(-0.5 * width * q * q);
    const double df = -width * q * f;
    const double d2f = (width * width * q * q - width) * f;
    const double lhs = 0.5 * (-d2f - 2.0 / q * df + q * q * f);
    worst = std::max(worst, std::abs(lhs - eigenvalue * f));
  }
  return worst;
}

double gaussian_limit_residual(double gamma0) { return oscillator_residual(1.0, gamma0); }

double ultrarelativistic_residual(double gamma, double q_lo, double q_hi) {
  constexpr int kSamples = 4000;
  const double s = 0.5 * (std::sqrt(5.0) - 1.0);
  double worst = 0.0;
  for (int i = 0; i <= kSamples; ++i) {
    const double q = q_lo + (q_hi - q_lo) * i / kSamples;
    const double g = std::exp(-0.5 * q * q);
    const double f = std::pow(q, s) * g;
    // f' = f (s/q - q),  f'' = f ((s/q - q)^2 - s/q^2 - 1)
    const double log_d = s / q - q;
    const double df = f * log_d;
    const double d2f = f * (log_d * log_d - s / (q * q) - 1.0);
    const double lhs = 0.5 * (-d2f - 2.0 / q * df + (1.0 / (q * q) + q * q) * f);
    worst = std::max(worst, std::abs(lhs - gamma * f));
  }
  return worst;
}

BalanceReport virial_balance(const RelativisticScale& d, const radial::EigenResult& res) {
  const radial::RadialPotential pot = relativistic_potential(d);
  const double q2 = radial::moment(res, [](double q) { return q * q; });
  const double total = 2.0 * radial::rayleigh_quotient(pot, res);
  const double rest = total - q2;
  const double scale = d.is_infinite() ? std::numeric_limits<double>::infinity() : d.value();
  return {q2, rest, std::pow(q2 / rest, 0.25) * scale};
}

}  // namespace relhur::rel
