#pragma once

#include <stdexcept>
#include <string>

namespace relhur {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Quantity diverges at the requested parameters (e.g. infinite dispersion).
class DivergenceError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An iterative or adaptive procedure ran out of budget. Carries the best
// estimate reached so callers can still report it.
class NonConvergence : public std::runtime_error {
 public:
  NonConvergence(const std::string& what, double best_estimate, double est_error)
      : std::runtime_error(what), best_estimate_(best_estimate), est_error_(est_error) {}

  double best_estimate() const noexcept { return best_estimate_; }
  double est_error() const noexcept { return est_error_; }

 private:
  double best_estimate_;
  double est_error_;
};

}  // namespace relhur
