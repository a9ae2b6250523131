#pragma once

#include <stdexcept>
#include <string>

namespace schur {

enum class ErrorKind {
  // precondition failures (CLI exit 2)
  ClosureCapExceeded,
  DegreeMismatch,
  NotFixing,
  IndexOutOfRange,
  ShapeMismatch,
  NotHermitian,
  NotPositiveDefinite,
  NotUnit,
  RepGroupMismatch,
  UnknownName,
  IncompatibleGroup,
  InconsistentHomomorphism,
  NotUnitary,
  NotInGroup,
  TooLarge,
  BadIndices,
  PreconditionViolated,
  // malformed input (CLI exit 3)
  ParseError,
  // a cross-check between two independent routes disagreed (CLI exit 1)
  InternalError,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace schur
