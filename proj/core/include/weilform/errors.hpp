#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace weilform {

/// Domain error categories raised by the library. The CLI maps every one of
/// these to exit status 1.
enum class Errc {
  DivisionByZero,
  OrderMismatch,
  InvalidDivisor,
  NotSquarefree,
  OutOfRange,
  NormMismatch,
  NotFound,
  NotUnimodular,
  DivisionByNonUnit,
  FractionalExponents,
  PositiveArgument,
  ZeroLValue,
  UnrealizedClass,
  DeltaConditionViolated,
  InconsistentComponents,
  ConvergenceTooSlow,
  InsufficientPrecision,
  NonCuspidalBasis,
  NotHolomorphic,
  UnsupportedCase,
  ParseError,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace weilform
