// Acceptance run: one PASS/FAIL line per criterion, with the measured values.
// Indented "info" lines carry supporting numbers; they never change a verdict.
// Exit status is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "relhur/dirac_states.hpp"
#include "relhur/hopfion.hpp"
#include "relhur/hydrogen.hpp"
#include "relhur/quadrature.hpp"
#include "relhur/rel_uncertainty.hpp"
#include "relhur/specfun.hpp"

using namespace relhur;
using rel::RelativisticScale;
using cd = std::complex<double>;

namespace {

// frozen regression values (see the unit suites for their oracles)
constexpr double kGammaD1 = 1.672106402191;
constexpr double kGammaHA1 = 1.964911186995;
constexpr double kGammaZ80 = 2.361374481908;

int failures = 0;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

template <class F>
double timed(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return seconds_since(t0);
}

void verdict(int n, bool ok, const std::string& what) {
  std::printf("[%s] %d. %s\n", ok ? "PASS" : "FAIL", n, what.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

void info(const char* f, auto... args) {
  if constexpr (sizeof...(args) == 0)
    std::printf("       info: %s\n", f);
  else
    std::printf("       info: %s\n", fmt(f, args...).c_str());
}

void criterion1() {
  double g = 0.0;
  const double t = timed([&] { g = rel::gamma_bound(RelativisticScale::finite(0.0)); });
  const double dev = std::abs(g - 1.5);
  verdict(1, dev <= 1e-7 && t < 1.0,
          fmt("nonrelativistic anchor: gamma(0) = %.12f, |dev| = %.2e (<= 1e-7), %.3f s (< 1 s)", g, dev, t));
}

void criterion2() {
  double g = 0.0;
  const double t = timed([&] { g = rel::gamma_bound(RelativisticScale::infinity()); });
  const double exact = 1.0 + std::sqrt(5.0) / 2.0;
  const double dev = std::abs(g - exact);
  verdict(2, dev <= 1e-6 && t < 1.0,
          fmt("ultrarelativistic anchor: gamma(inf) = %.12f vs %.12f, |dev| = %.2e (<= 1e-6), %.3f s (< 1 s)", g, exact,
              dev, t));
}

void criterion3() {
  const double ds[] = {1e-2, 1e-1, 1.0, 10.0, 100.0};
  std::vector<RelativisticScale> grid;
  for (double d : ds) grid.push_back(RelativisticScale::finite(d));
  const auto curve = rel::sweep(grid);
  bool above = true;
  for (const auto& row : curve.rows) {
    above = above && row.gamma > 1.5;
    info("gamma(%g) = %.10f", row.d.value(), row.gamma);
  }
  const double approach = curve.rows[0].gamma - 1.5;
  const bool mono = curve.strictly_increasing();
  verdict(3, above && approach < 1e-2 && mono,
          fmt("strictness/approach/monotone: all > 3/2: %s, gamma(1e-2) - 3/2 = %.3e (< 1e-2), increasing: %s",
              above ? "yes" : "no", approach, mono ? "yes" : "no"));
}

void criterion4() {
  // literal: f0 = exp(-gamma0 q^2 / 2), gamma0 = 3/2, in the d = 0 equation
  const double literal = rel::oscillator_residual(1.5, 1.5);
  const double f_inf = rel::ultrarelativistic_residual(rel::kGammaUltrarelativistic);
  verdict(4, literal <= 1e-10 && f_inf <= 1e-10,
          fmt("exact-solution residuals on [0.01, 8]: exp(-3q^2/4) at gamma0 = 3/2: %.3e; "
              "q^((sqrt5-1)/2) exp(-q^2/2) at 1+sqrt5/2: %.3e (each <= 1e-10)",
              literal, f_inf));
  info("exp(-3q^2/4) leaves (3/4 - 5q^2/8) f; the d = 0 ground state is exp(-q^2/2)");
  info("exp(-q^2/2) at gamma0 = 3/2: residual %.3e; at gamma0 = 1.4: %.3e", rel::gaussian_limit_residual(1.5),
       rel::gaussian_limit_residual(1.4));
}

void criterion5() {
  const auto t0 = std::chrono::steady_clock::now();
  const double at_one = hydrogen::uncertainty_product_closed(hydrogen::CoulombState::from_gamma(1.0));
  const bool anchor = std::abs(at_one - std::sqrt(3.5)) <= 1e-9;

  bool oracle_vs_published = true, oracle_vs_moments = true;
  for (int Z : {1, 40, 80, 110}) {
    const auto s = hydrogen::CoulombState::from_z(Z);
    const double oracle = hydrogen::quadrature_oracle(s).gamma;
    const double published = hydrogen::uncertainty_product_closed(s);
    const double moments = hydrogen::closed_moments(s).gamma;
    const double rel_pub = std::abs(oracle - published) / published;
    const double rel_mom = std::abs(oracle - moments) / moments;
    oracle_vs_published = oracle_vs_published && rel_pub <= 1e-6;
    oracle_vs_moments = oracle_vs_moments && rel_mom <= 1e-6;
    info("Z = %3d: oracle %.10f, published closed form %.10f (rel %.2e), Gamma-moment form %.10f (rel %.2e)", Z,
         oracle, published, rel_pub, moments, rel_mom);
  }

  bool divergence = true;
  for (double g : {0.5, 0.4, 0.1}) {
    try {
      hydrogen::uncertainty_product_closed(hydrogen::CoulombState::from_gamma(g));
      divergence = false;
    } catch (const DivergenceError&) {
    }
    try {
      hydrogen::quadrature_oracle(hydrogen::CoulombState::from_gamma(g));
      divergence = false;
    } catch (const DivergenceError&) {
    }
  }
  const double t = seconds_since(t0);
  verdict(5, anchor && oracle_vs_published && divergence && t < 10.0,
          fmt("hydrogen: closed form at gamma_c=1 = %.10f vs sqrt(7/2) (%s); oracle vs closed form at Z in "
              "{1,40,80,110} to 1e-6: %s; divergence for gamma_c <= 1/2: %s; %.2f s (< 10 s)",
              at_one, anchor ? "ok" : "off", oracle_vs_published ? "ok" : "no", divergence ? "ok" : "no", t));
  info("oracle vs Gamma-moment form (cubic coefficient -2) to 1e-6 at all four Z: %s",
       oracle_vs_moments ? "yes" : "no");
}

void criterion6() {
  const std::vector<double> grid{0.1, 0.2, 0.5, 1.0, 2.0, 5.0, 10.0, 20.0, 50.0};
  const auto t0 = std::chrono::steady_clock::now();
  const auto curve = hopfion::gamma_h_curve(grid);
  const double t = seconds_since(t0);
  for (const auto& row : curve.rows) info("gamma_H(%g) = %.10f", row.param, row.gamma);
  const double g50 = curve.rows.back().gamma;
  const double rel50 = std::abs(g50 - 1.5) / 1.5;
  const bool dec = curve.strictly_decreasing();
  verdict(6, rel50 <= 0.02 && dec && t < 60.0,
          fmt("hopfion: gamma_H(50) = %.6f, %.2f%% from 3/2 (<= 2%%); strictly decreasing on 9 points: %s; %.2f s (< 60 s)",
              g50, 100.0 * rel50, dec ? "yes" : "no", t));
}

void criterion7() {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const dirac::MomentumPoint pt{-5.0 * std::log(u01(rng)), std::acos(2.0 * u01(rng) - 1.0),
                                  2.0 * std::numbers::pi * u01(rng)};
    const auto up = dirac::bispinor_u(pt, dirac::Spin::Up);
    const auto dn = dirac::bispinor_u(pt, dirac::Spin::Down);
    worst = std::max({worst, std::abs(up.squaredNorm() - 1.0), std::abs(dn.squaredNorm() - 1.0), std::abs(up.dot(dn))});
  }
  verdict(7, worst <= 1e-12, fmt("bispinor orthonormality over 1000 random momenta: max dev %.2e (<= 1e-12)", worst));
}

void criterion8() {
  double rec = 0.0;
  for (double x = 1e-3; x <= 200.0; x *= 1.1) {
    const double k2 = specfun::bessel_k(2, x);
    rec = std::max(rec, std::abs(k2 - specfun::bessel_k(0, x) - 2.0 / x * specfun::bessel_k(1, x)) / k2);
  }
  double integ = 0.0;
  for (int nu : {0, 1, 2})
    for (double x : {0.5, 2.0, 10.0}) {
      const auto r = quadrature::integrate_semi_infinite([nu, x](double t) {
        const double c = std::cosh(t);
        return 0.5 * (std::exp(-x * c + nu * t) + std::exp(-x * c - nu * t));
      });
      integ = std::max(integ, std::abs(r.value - specfun::bessel_k(nu, x)) / specfun::bessel_k(nu, x));
    }
  verdict(8, rec <= 1e-10 && integ <= 1e-9,
          fmt("special functions: K2 recurrence max rel dev %.2e (<= 1e-10); cosh-integral max rel dev %.2e (<= 1e-9)",
              rec, integ));
}

dirac::AmplitudePair radial_up(std::function<double(double)> f) {
  dirac::AmplitudePair a;
  a.f_plus = [f](double p, double, double) { return cd(f(p)); };
  a.phi_independent = true;
  return a;
}

void criterion9() {
  // phase covariance on a spin-mixed, phi-dependent state and on the hopfion
  double phase_dev = 0.0;
  {
    dirac::AmplitudePair base;
    base.f_plus = [](double p, double, double) { return cd(std::exp(-0.5 * p * p)); };
    base.f_minus = [](double p, double th, double ph) {
      return 0.6 * p * std::sin(th) * std::exp(-0.8 * p * p) * std::polar(1.0, ph);
    };
    const auto r0 = dirac::dispersion_functional(base);
    dirac::AmplitudePair rot = base;
    const cd e = std::polar(1.0, 1.3);
    rot.f_plus = [f = base.f_plus, e](double p, double t, double ph) { return e * f(p, t, ph); };
    rot.f_minus = [f = base.f_minus, e](double p, double t, double ph) { return e * f(p, t, ph); };
    const auto r1 = dirac::dispersion_functional(rot);
    phase_dev = std::max({std::abs(r1.gamma - r0.gamma) / r0.gamma, std::abs(r1.delta_r_sq - r0.delta_r_sq) / r0.delta_r_sq,
                          std::abs(r1.delta_p_sq - r0.delta_p_sq) / r0.delta_p_sq,
                          std::abs(r1.norm_sq - r0.norm_sq) / r0.norm_sq, (r1.mean_r - r0.mean_r).norm(),
                          (r1.mean_p - r0.mean_p).norm()});
  }
  const bool phase_ok = phase_dev <= 1e-9;

  // m = 0 scaling
  double scale_dev = 0.0;
  {
    const auto f = [](double p) { return std::exp(-0.5 * p * p) * (1.0 + p); };
    const auto r1 = dirac::dispersion_functional(radial_up(f), {}, 0.0);
    for (double lam : {0.5, 2.0}) {
      const auto rl = dirac::dispersion_functional(radial_up([&](double p) { return f(p / lam); }), {}, 0.0);
      scale_dev = std::max({scale_dev, std::abs(rl.gamma - r1.gamma) / r1.gamma,
                            std::abs(rl.delta_p_sq / (lam * lam * r1.delta_p_sq) - 1.0),
                            std::abs(rl.delta_r_sq * lam * lam / r1.delta_r_sq - 1.0)});
    }
  }
  const bool scale_ok = scale_dev <= 1e-8;

  // spherical reduction against a radial-only integral
  double red_dev = 0.0;
  for (double m : {1.0, 0.25}) {
    const auto f = [](double p) { return (1.0 + p * p) * std::exp(-p * p); };
    const auto df = [](double p) { return (2.0 * p - 2.0 * p * (1.0 + p * p)) * std::exp(-p * p); };
    const auto rep = dirac::dispersion_functional(radial_up(f), {}, m);
    const quadrature::IntegrandN g = [&](double p) {
      const double e = std::sqrt(m * m + p * p);
      const double w = p * p / (e * (e + m)) + m * m * p * p / (4.0 * e * e * e * e);
      Eigen::VectorXd v(2);
      v << p * p * df(p) * df(p) + w * f(p) * f(p), p * p * f(p) * f(p);
      return v;
    };
    const auto r = quadrature::integrate_semi_infinite(g, 2);
    red_dev = std::max(red_dev, std::abs(rep.delta_r_sq - r.value(0) / r.value(1)) / rep.delta_r_sq);
  }
  const bool red_ok = red_dev <= 1e-8;

  const double g_d1 = rel::gamma_bound(RelativisticScale::finite(1.0));
  const double g_a1 = hopfion::gamma_h(hopfion::HopfionState(1.0)).gamma;
  const double g_z80 = hydrogen::quadrature_oracle(hydrogen::CoulombState::from_z(80)).gamma;
  const double dev_d1 = std::abs(g_d1 - kGammaD1), dev_a1 = std::abs(g_a1 - kGammaHA1), dev_z80 = std::abs(g_z80 - kGammaZ80);
  const bool frozen_ok = dev_d1 <= 1e-6 && dev_a1 <= 1e-6 && dev_z80 <= 1e-6;

  info("phase covariance max dev %.2e (<= 1e-9); m=0 scaling max dev %.2e (<= 1e-8); reduction max rel dev %.2e (<= 1e-8)",
       phase_dev, scale_dev, red_dev);
  info("gamma_bound(1) = %.12f (frozen %.12f), gamma_H(1) = %.12f (frozen %.12f), hydrogen Z=80 = %.12f (frozen %.12f)",
       g_d1, kGammaD1, g_a1, kGammaHA1, g_z80, kGammaZ80);
  verdict(9, phase_ok && scale_ok && red_ok && frozen_ok,
          fmt("property suite: phase %s, scaling %s, reduction %s, frozen regressions within 1e-6 %s (max dev %.2e)",
              phase_ok ? "ok" : "no", scale_ok ? "ok" : "no", red_ok ? "ok" : "no", frozen_ok ? "ok" : "no",
              std::max({dev_d1, dev_a1, dev_z80})));
}

}  // namespace

int main() {
  const std::function<void()> criteria[] = {criterion1, criterion2, criterion3, criterion4, criterion5,
                                            criterion6, criterion7, criterion8, criterion9};
  int n = 0;
  for (const auto& c : criteria) {
    ++n;
    try {
      c();
    } catch (const std::exception& e) {
      verdict(n, false, std::string("threw: ") + e.what());
    }
  }
  std::printf("%d of 9 criteria passed\n", 9 - failures);
  return failures;
}
