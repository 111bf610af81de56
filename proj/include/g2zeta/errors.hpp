#pragma once

#include <stdexcept>
#include <string>

namespace g2zeta {

// Error taxonomy shared by all modules. The CLI maps InvalidInput and
// Precondition failures to exit code 2; anything that reaches the top
// uncaught is a bug.

struct InvalidInput : std::invalid_argument {
  explicit InvalidInput(const std::string& msg) : std::invalid_argument(msg) {}
};

struct PreconditionError : std::invalid_argument {
  explicit PreconditionError(const std::string& msg) : std::invalid_argument(msg) {}
};

struct ArithmeticError : std::domain_error {
  explicit ArithmeticError(const std::string& msg) : std::domain_error(msg) {}
};

struct EvalError : std::domain_error {
  explicit EvalError(const std::string& msg) : std::domain_error(msg) {}
};

struct UnsupportedDomain : std::domain_error {
  explicit UnsupportedDomain(const std::string& msg) : std::domain_error(msg) {}
};

struct UnsupportedElement : std::domain_error {
  explicit UnsupportedElement(const std::string& msg) : std::domain_error(msg) {}
};

struct UnsupportedRegime : std::domain_error {
  explicit UnsupportedRegime(const std::string& msg) : std::domain_error(msg) {}
};

/// A sweep or integration would exceed the configured work budget.
/// Carries the number of tuples/cells the request would have needed.
struct ResourceLimit : std::runtime_error {
  ResourceLimit(const std::string& msg, unsigned long long required)
      : std::runtime_error(msg + " (required work: " + std::to_string(required) + ")"),
        required_work(required) {}
  unsigned long long required_work;
};

/// A Hensel-lift certificate failed: some base solution has vanishing
/// gradient mod p, so the p^(n-1) lifting formula does not apply.
struct SingularPoint : std::domain_error {
  SingularPoint(const std::string& msg, std::string tuple)
      : std::domain_error(msg + " at " + tuple), offending_tuple(std::move(tuple)) {}
  std::string offending_tuple;
};

}  // namespace g2zeta
