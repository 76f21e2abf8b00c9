#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace matsolve {

// Coarse classification used by the CLI to select an exit code and by tests
// to assert that the right guard fired.
enum class ErrorKind {
  Parse,           // malformed input file, bad dimensions, bad polynomial text
  Singular,        // exact singular matrix where invertibility is required
  ZeroPolynomial,  // operation undefined on the zero polynomial
  NotGeneric,      // a genericity assumption failed (identified in message)
  BudgetExceeded,  // Groebner pair budget exhausted
  CapExceeded,     // enumeration cap exceeded
  NoConvergence,   // iteration cap hit before residuals met tolerance
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

inline Error parse_error(const std::string& msg) { return Error(ErrorKind::Parse, msg); }
inline Error singular_error(const std::string& msg) { return Error(ErrorKind::Singular, msg); }
inline Error not_generic(const std::string& msg) {
  return Error(ErrorKind::NotGeneric, "not generic: " + msg);
}
inline Error budget_exceeded(const std::string& msg) {
  return Error(ErrorKind::BudgetExceeded, msg);
}
inline Error cap_exceeded(const std::string& msg) { return Error(ErrorKind::CapExceeded, msg); }

// NoConvergence carries the residuals reached when the iteration cap was hit.
class NoConvergenceError : public Error {
 public:
  NoConvergenceError(std::string message, std::vector<double> residuals)
      : Error(ErrorKind::NoConvergence, std::move(message)),
        achieved_residuals(std::move(residuals)) {}

  std::vector<double> achieved_residuals;
};

}  // namespace matsolve
