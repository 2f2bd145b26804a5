#pragma once

#include <stdexcept>
#include <string>

namespace spq {

enum class ErrorKind {
  DuplicateIndex,
  MissingIndex,
  BadPairOrder,
  IndexOutOfRange,
  NotNoncompactImaginary,
  NotReal,
  OutOfDomain,
  DuplicateLabel,
  ShapeViolation,
  UnknownCycle,
  ShapeMismatch,
  ParseError,
  VerificationFailure,
  InternalInvariant,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace spq
