#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace jordan {

enum class ErrorKind {
  ParseError,
  NonEnumerableRing,
  NotIdempotent,
  NotInvertible,
  ShapeMismatch,
  IncompatibleRings,
  AxiomFailure,
  DegenerateTrace,
  DegenerateForm,
  BadDims,
  BadInput,
  NoSquareRootOfMinusOne,
  NotSimilitude,
  NotIsometry,
  NonFieldRing,
  GradingViolation,
  BudgetExceeded,
  MixedSystems,
  UnknownClaim,
  // Theorem violations: never expected at desk scale.
  NotFactorable,
};

std::string_view error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Raised when a computation contradicts one of the structure theorems the
// toolkit verifies. Carries a JSON reproducer; callers must not swallow it.
class TheoremViolation : public Error {
 public:
  TheoremViolation(ErrorKind kind, const std::string& message, std::string reproducer)
      : Error(kind, message), reproducer_(std::move(reproducer)) {}

  const std::string& reproducer() const { return reproducer_; }

 private:
  std::string reproducer_;
};

}  // namespace jordan
