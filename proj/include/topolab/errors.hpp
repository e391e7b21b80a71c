#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace topolab {

enum class ErrorKind {
  InvalidGenerator,
  TooLarge,
  NotATopology,
  InvalidMap,
  NotADiscretization,
  HypothesisViolated,
  InternalInvariantViolation,
  NotInAlgebra,
  NotOpen,
  InvalidSet,
  NotACMorphism,
  OutOfComputableSlice,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

// All library failures are reported through this one exception type; callers
// that care about the cause switch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace topolab
