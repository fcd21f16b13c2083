#include "weilform/errors.hpp"

namespace weilform {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::OrderMismatch: return "OrderMismatch";
    case Errc::InvalidDivisor: return "InvalidDivisor";
    case Errc::NotSquarefree: return "NotSquarefree";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::NormMismatch: return "NormMismatch";
    case Errc::NotFound: return "NotFound";
    case Errc::NotUnimodular: return "NotUnimodular";
    case Errc::DivisionByNonUnit: return "DivisionByNonUnit";
    case Errc::FractionalExponents: return "FractionalExponents";
    case Errc::PositiveArgument: return "PositiveArgument";
    case Errc::ZeroLValue: return "ZeroLValue";
    case Errc::UnrealizedClass: return "UnrealizedClass";
    case Errc::DeltaConditionViolated: return "DeltaConditionViolated";
    case Errc::InconsistentComponents: return "InconsistentComponents";
    case Errc::ConvergenceTooSlow: return "ConvergenceTooSlow";
    case Errc::InsufficientPrecision: return "InsufficientPrecision";
    case Errc::NonCuspidalBasis: return "NonCuspidalBasis";
    case Errc::NotHolomorphic: return "NotHolomorphic";
    case Errc::UnsupportedCase: return "UnsupportedCase";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace weilform
