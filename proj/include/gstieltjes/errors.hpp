#pragma once

#include <stdexcept>
#include <string>

namespace gstieltjes {

// Invalid input or a violated mathematical precondition. The CLI maps this to exit code 3.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A series or quadrature could not reach the requested tolerance within its budget.
// Carries the best value obtained so callers may still report it.
class BudgetError : public DomainError {
 public:
  BudgetError(const std::string& what, double best_value, double error_bound)
      : DomainError(what), best_value_(best_value), error_bound_(error_bound) {}

  double best_value() const noexcept { return best_value_; }
  double error_bound() const noexcept { return error_bound_; }

 private:
  double best_value_;
  double error_bound_;
};

}  // namespace gstieltjes
