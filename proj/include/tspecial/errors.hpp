#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tspecial {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Result (or an intermediate) would leave the representable range.
class RangeError : public std::range_error {
public:
  using std::range_error::range_error;
};

/// A series or iteration did not settle within its term budget.
class ConvergenceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Adaptive quadrature ran out of budget; carries the best estimate so far.
class AccuracyError : public std::runtime_error {
public:
  AccuracyError(const std::string& what, double best_value, double best_error)
      : std::runtime_error(what), best_value_(best_value), best_error_(best_error) {}

  double best_value() const noexcept { return best_value_; }
  double best_error() const noexcept { return best_error_; }

private:
  double best_value_;
  double best_error_;
};

/// An explicit time-stepping scheme hit a non-finite value.
class PropagationError : public std::runtime_error {
public:
  PropagationError(const std::string& what, int step) : std::runtime_error(what), step_(step) {}

  int step() const noexcept { return step_; }

private:
  int step_;
};

/// Caller broke a documented precondition that is not a domain issue.
class PreconditionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A scalar minimization could not bracket an interior minimum.
class OptimizationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// One iterate of a parameter fit: parameters and residual norm.
struct FitStep {
  double lambda = 0.0;
  double mu = 0.0;
  double residual = 0.0;
};

/// Parameter fitting diverged or hit a singular Jacobian; carries the iterates.
class FitError : public std::runtime_error {
public:
  FitError(const std::string& what, std::vector<FitStep> trace)
      : std::runtime_error(what), trace_(std::move(trace)) {}

  const std::vector<FitStep>& trace() const noexcept { return trace_; }

private:
  std::vector<FitStep> trace_;
};

}  // namespace tspecial
