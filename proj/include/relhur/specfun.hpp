#pragma once

// Gamma function and modified Bessel functions of the second kind
// (Macdonald functions) K_0, K_1, K_2 for real positive arguments.

#include <stdexcept>

#include "relhur/errors.hpp"

namespace relhur::specfun {

struct SpecfunResult {
  double value = 0.0;
  double est_abs_error = 0.0;
  // Set when the true value is below the smallest normal double and 0 was
  // returned instead.
  bool underflow = false;
};

class UnsupportedOrder : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Gamma(x) for x > 0, Lanczos approximation with reflection below 1/2.
SpecfunResult gamma_result(double x);
double gamma_fn(double x);

/// K_order(x) for order in {0, 1, 2} and x > 0. Returns 0 with the
/// underflow flag set for x > 700.
SpecfunResult bessel_k_result(int order, double x);
double bessel_k(int order, double x);

/// e^x K_order(x); finite for every x > 0.
double bessel_k_scaled(int order, double x);

}  // namespace relhur::specfun
