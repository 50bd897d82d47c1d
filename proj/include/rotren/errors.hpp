#pragma once

#include <stdexcept>
#include <string>

namespace rotren {

// All library failures derive from Error and carry a short machine-greppable
// code ("E_DOMAIN", "E_NONCONVERGENCE", ...) next to the human-readable text.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

// Bad argument values: reduced fractions out of range, q too small, rational
// input where an irrational is required, and so on.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error("E_DOMAIN", what) {}
};

// Malformed textual input (rotation-number literals, angles).
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error("E_PARSE", what) {}
};

// An iterative solve ran out of its iteration budget.
class NonConvergenceError : public Error {
 public:
  explicit NonConvergenceError(const std::string& what)
      : Error("E_NONCONVERGENCE", what) {}
};

// A solver converged, but to a cycle whose true period divides the requested
// one (the divisor test failed).
class WrongPeriodError : public Error {
 public:
  WrongPeriodError(const std::string& what, long long divisor)
      : Error("E_WRONG_PERIOD", what), divisor_(divisor) {}

  long long divisor() const { return divisor_; }

 private:
  long long divisor_;
};

// A sampling-based estimate could not reach a decision at the requested
// sample count.
class InconclusiveError : public Error {
 public:
  explicit InconclusiveError(const std::string& what)
      : Error("E_INCONCLUSIVE", what) {}
};

}  // namespace rotren
