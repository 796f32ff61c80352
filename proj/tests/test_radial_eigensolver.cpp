#include <doctest.h>

#include <cmath>

#include "oracles/radial_dense_oracle.hpp"
#include "relhur/quadrature.hpp"
#include "relhur/radial_eigensolver.hpp"

using namespace relhur;
using radial::RadialPotential;

namespace {

const double kSqrt5 = std::sqrt(5.0);

RadialPotential oscillator(double l_term = 0.0) {
  RadialPotential p;
  p.evaluate = [l_term](double q) { return l_term / (q * q) + q * q; };
  p.singular_strength = l_term;
  p.regular_part = [](double q) { return q * q; };
  return p;
}

// d = 1 member of the bound potential family, written out independently
RadialPotential soft_core() {
  RadialPotential p;
  p.evaluate = [](double q) {
    // (1 - 1/e)/q^2 with e = sqrt(1 + q^2), rationalized
    const double e = std::sqrt(1.0 + q * q);
    return 1.0 / (e * (e + 1.0)) + 1.0 / (4.0 * e * e * e * e) + q * q;
  };
  return p;
}

// Rayleigh quotient of an analytic trial f with derivative df, measure q^2 dq
double trial_quotient(const RadialPotential& pot, const std::function<double(double)>& f,
                      const std::function<double(double)>& df) {
  const quadrature::IntegrandN integrand = [&](double q) {
    Eigen::VectorXd v(2);
    const double fv = f(q), dv = df(q);
    v << 0.5 * (dv * dv + pot(q) * fv * fv) * q * q, fv * fv * q * q;
    return v;
  };
  const auto r = quadrature::integrate_semi_infinite(integrand, 2);
  return r.value(0) / r.value(1);
}

}  // namespace

TEST_CASE("oscillator family closed forms") {
  const auto r0 = radial::ground_state(oscillator(0.0));
  CHECK(std::abs(r0.gamma - 1.5) <= 1e-7);
  const auto r1 = radial::ground_state(oscillator(1.0));
  CHECK(std::abs(r1.gamma - (1.0 + kSqrt5 / 2.0)) <= 1e-7);
  const auto r2 = radial::ground_state(oscillator(2.0));
  CHECK(std::abs(r2.gamma - 2.5) <= 1e-7);
}

TEST_CASE("soft-core potential against the uniform-grid oracle") {
  const auto pot = soft_core();
  const auto r = radial::ground_state(pot);
  // frozen: uniform u-form, q_max 12, 20000 points, Richardson with 10000
  CHECK(std::abs(r.gamma - 1.672106402191) <= 1e-6);
  const double live = oracle::uniform_u_form_extrapolated(pot.evaluate, 12.0, 4000);
  CHECK(std::abs(r.gamma - live) <= 1e-6);
}

TEST_CASE("result invariants") {
  for (double c : {0.0, 1.0, 2.0}) {
    const auto r = radial::ground_state(oscillator(c));
    CAPTURE(c);
    CHECK(r.gamma > 0.0);
    CHECK(r.f_values.allFinite());
    CHECK(r.grid.size() == r.f_values.size());
    CHECK(r.diagnostics.q_max == 10.0);
    CHECK(r.diagnostics.grid_size >= 4000);
    CHECK(r.diagnostics.est_error <= 1e-7);
    CHECK(std::abs(radial::moment(r, [](double) { return 1.0; }) - 1.0) <= 1e-8);
    CHECK(radial::interior_nodes(r) == 0);
  }
}

TEST_CASE("moments") {
  const auto r0 = radial::ground_state(oscillator(0.0));
  CHECK(radial::moment(r0, [](double q) { return q * q; }) == doctest::Approx(1.5).epsilon(1e-6));

  // f = q^s e^{-q^2/2}: <q^2> = Gamma(s + 5/2) / Gamma(s + 3/2) = s + 3/2
  const double s = (kSqrt5 - 1.0) / 2.0;
  const double q2 = std::tgamma(s + 2.5) / std::tgamma(s + 1.5);
  CHECK(q2 == doctest::Approx(s + 1.5).epsilon(1e-13));
  const auto r1 = radial::ground_state(oscillator(1.0));
  CHECK(radial::moment(r1, [](double q) { return q * q; }) == doctest::Approx(q2).epsilon(1e-6));

  // 1/q^2 is the strongest allowed singularity
  const double inv = radial::moment(r0, [](double q) { return 1.0 / (q * q); });
  CHECK(inv == doctest::Approx(2.0).epsilon(1e-6));  // <q^-2> = 2 for e^{-q^2/2}
  CHECK_THROWS_AS(radial::moment(r0, [](double q) { return 1.0 / (q * q * q); }), DomainError);
}

TEST_CASE("rayleigh quotient consistency") {
  const double tol = 1e-7;
  for (const auto& pot : {oscillator(0.0), oscillator(1.0), oscillator(2.0), soft_core()}) {
    const auto r = radial::ground_state(pot, 10.0, 4000, tol);
    CHECK(std::abs(radial::rayleigh_quotient(pot, r) - r.gamma) <= 10.0 * tol);
  }
}

TEST_CASE("variational upper bound") {
  const double tol = 1e-7;
  const auto pot = soft_core();
  const double g = radial::ground_state(pot).gamma;
  for (double b : {0.6, 0.9, 1.0, 1.1, 1.7}) {
    const double rq = trial_quotient(
        pot, [b](double q) { return std::exp(-b * q * q / 2.0); },
        [b](double q) { return -b * q * std::exp(-b * q * q / 2.0); });
    CAPTURE(b);
    CHECK(rq >= g - tol);
  }
  for (double k : {0.5, 1.0, 2.0}) {
    const double rq = trial_quotient(
        pot, [k](double q) { return std::exp(-q * q / 2.0 - k * q); },
        [k](double q) { return -(q + k) * std::exp(-q * q / 2.0 - k * q); });
    CHECK(rq >= g - tol);
  }
  // oscillator: the quotient of e^{-b q^2/2} is (3/4)(b + 1/b)
  const auto osc = oscillator(0.0);
  const double rq = trial_quotient(
      osc, [](double q) { return std::exp(-0.35 * q * q); }, [](double q) { return -0.7 * q * std::exp(-0.35 * q * q); });
  CHECK(rq == doctest::Approx(0.75 * (0.7 + 1.0 / 0.7)).epsilon(1e-9));
  CHECK(rq >= radial::ground_state(osc).gamma - tol);
}

TEST_CASE("grid convergence") {
  const double tol = 1e-7;
  for (const auto& pot : {oscillator(0.0), oscillator(1.0), soft_core()}) {
    const double a = radial::ground_state(pot, 10.0, 4000, tol).gamma;
    const double b = radial::ground_state(pot, 10.0, 8000, tol).gamma;
    CHECK(std::abs(a - b) < tol);
  }
  // single levels approach the extrapolated value from consistent sides
  const auto pot = oscillator(0.0);
  const double e1 = std::abs(radial::ground_state_single_level(pot, 10.0, 1000) - 1.5);
  const double e2 = std::abs(radial::ground_state_single_level(pot, 10.0, 2000) - 1.5);
  CHECK(e2 < e1);
  CHECK(e1 / e2 == doctest::Approx(4.0).epsilon(0.05));
}

TEST_CASE("potential declares its origin behaviour") {
  for (double c : {0.0, 1.0, 2.0}) {
    const auto pot = oscillator(c);
    for (double q : {1e-3, 1e-4}) CHECK(pot(q) * q * q == doctest::Approx(c).epsilon(1e-6));
  }
  CHECK(oscillator(1.0).origin_exponent() == doctest::Approx((kSqrt5 - 1.0) / 2.0));
  CHECK(oscillator(2.0).origin_exponent() == doctest::Approx(1.0));
  CHECK(oscillator(0.0).origin_exponent() == doctest::Approx(0.0));
}

TEST_CASE("rejected inputs") {
  auto bad = oscillator(0.0);
  bad.singular_strength = -0.3;
  bad.evaluate = [](double q) { return -0.3 / (q * q) + q * q; };
  bad.regular_part = nullptr;
  CHECK_THROWS_AS(radial::ground_state(bad), DomainError);
  CHECK_THROWS_AS(radial::ground_state(oscillator(), 10.0, 100, 1e-7), DomainError);
  CHECK_THROWS_AS(radial::ground_state(oscillator(), 10.0, 4000, 0.0), DomainError);
  // V(2) = 4 < 4 gamma: box too small to contain the gaussian tail
  CHECK_THROWS_AS(radial::ground_state(oscillator(), 2.0, 4000, 1e-7), DomainError);
  CHECK_THROWS_AS(radial::ground_state(RadialPotential{}), DomainError);
}

TEST_CASE("non-convergence when refinement cannot reach tol") {
  radial::SolverOptions o;
  o.tol = 1e-16;
  o.max_doublings = 0;
  CHECK_THROWS_AS(radial::ground_state(soft_core(), o), NonConvergence);
}
