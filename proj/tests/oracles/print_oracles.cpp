// Prints the oracle values frozen into the test suites. Each value comes from
// a route that does not share code with the library path it checks.

#include <chrono>
#include <cmath>
#include <cstdio>

#include "oracles/radial_dense_oracle.hpp"
#include "relhur/hopfion.hpp"
#include "relhur/hydrogen.hpp"
#include "relhur/rel_uncertainty.hpp"

int main() {
  using namespace relhur;
  const auto t0 = std::chrono::steady_clock::now();

  // gamma(d = 1): uniform u-form, q_max = 12, 20000 points
  const auto v1 = [](double q) { return rel::potential_v(q, rel::RelativisticScale::finite(1.0)); };
  std::printf("dense gamma(d=1) N=20000 raw        %.12f\n", oracle::uniform_u_form_lowest(v1, 12.0, 20000));
  std::printf("dense gamma(d=1) N=20000 richardson %.12f\n", oracle::uniform_u_form_extrapolated(v1, 12.0, 20000));
  for (double d : {0.5, 2.0, 4.0, 8.0}) {
    const auto v = [d](double q) { return rel::potential_v(q, rel::RelativisticScale::finite(d)); };
    std::printf("dense gamma(d=%g) richardson %.12f\n", d, oracle::uniform_u_form_extrapolated(v, 12.0, 20000));
  }

  std::printf("std::cyl_bessel_k(0,1) %.15g\n", std::cyl_bessel_k(0.0, 1.0));
  std::printf("std::cyl_bessel_k(1,1) %.15g\n", std::cyl_bessel_k(1.0, 1.0));
  std::printf("std::cyl_bessel_k(2,1) %.15g\n", std::cyl_bessel_k(2.0, 1.0));
  std::printf("std::cyl_bessel_k(2,2)/2 %.15g\n", std::cyl_bessel_k(2.0, 2.0) / 2.0);

  const auto z80 = hydrogen::CoulombState::from_z(80);
  const auto rep = hydrogen::quadrature_oracle(z80);
  std::printf("hydrogen Z=80 gamma_c %.15g quadrature gamma %.12f  moments %.12f  published %.12f\n", z80.gamma_c,
              rep.gamma, hydrogen::closed_moments(z80).gamma, hydrogen::uncertainty_product_closed(z80));
  std::printf("hydrogen Z=80 d %.12f\n", hydrogen::d_parameter(z80));
  std::printf("hydrogen gamma_c=0.8 d %.12f\n", hydrogen::d_parameter(hydrogen::CoulombState::from_gamma(0.8)));

  quadrature::QuadConfig loose;
  quadrature::QuadConfig tight;
  tight.abs_tol = 1e-12;
  tight.rel_tol = 1e-11;
  const hopfion::HopfionState h1(1.0);
  std::printf("hopfion a=1 gamma (default cfg) %.12f\n", hopfion::gamma_h(h1, loose).gamma);
  std::printf("hopfion a=1 gamma (tight cfg)   %.12f\n", hopfion::gamma_h(h1, tight).gamma);
  std::printf("hopfion a=1 norm %.15g ratio %.15g\n", hopfion::norm_const(h1).value, hopfion::norm_const(h1).ratio);

  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("elapsed %.2f s\n", secs);
}
