#pragma once

#include <stdexcept>
#include <string>

namespace lgl {

// Malformed or out-of-contract input (bad vertex id, multi-edge, wrong regularity, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Numerical failure: non-convergence, Hermiticity violation, broken factorization.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what, double best_residual = -1.0)
      : std::runtime_error(what), best_residual_(best_residual) {}
  double best_residual() const noexcept { return best_residual_; }

 private:
  double best_residual_;
};

// Requested problem exceeds a configured size cap.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lgl
