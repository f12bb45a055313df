#pragma once

#include <stdexcept>
#include <string>

namespace lspec {

// Exception types map one-to-one onto CLI exit codes (see tools/lspec.cpp).

/// Malformed or inadmissible user input (exit 2).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A brute-force search would exceed its configured work budget (exit 3).
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, double bound, double budget)
      : std::runtime_error(what), bound_(bound), budget_(budget) {}
  double bound() const noexcept { return bound_; }
  double budget() const noexcept { return budget_; }

 private:
  double bound_;
  double budget_;
};

/// Iterative numerics failed to converge (exit 4).
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double residual, int iterations)
      : std::runtime_error(what), residual_(residual), iterations_(iterations) {}
  double residual() const noexcept { return residual_; }
  int iterations() const noexcept { return iterations_; }

 private:
  double residual_;
  int iterations_;
};

}  // namespace lspec
