#pragma once

#include <stdexcept>
#include <string>

namespace hallmod {

enum class ErrorCode {
  NotDoubled,
  PoleAtPoint,
  ZeroBase,
  ParseError,
  LengthExceedsVars,
  DivergentProduct,
  EvenPrimeUnsupported,
  SizeBound,
  NotASubmodule,
  InternalInconsistency,
  BoundExceeded,
  FormMismatch,
  InsufficientMass,
  DivergentMeasure,
  InvalidArgument,
};

const char* error_name(ErrorCode code);

/* Every library failure is reported through this one type; the code says which. */
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hallmod
