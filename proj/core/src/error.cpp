#include "gctc/error.hpp"

namespace gctc {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::kNotPrime: return "NotPrime";
    case Errc::kBadExponent: return "BadExponent";
    case Errc::kModulusTooLarge: return "ModulusTooLarge";
    case Errc::kModulusMismatch: return "ModulusMismatch";
    case Errc::kNotInvertible: return "NotInvertible";
    case Errc::kDivisionByZero: return "DivisionByZero";
    case Errc::kNegativeValuation: return "NegativeValuation";
    case Errc::kPrecisionLoss: return "PrecisionLoss";
    case Errc::kBadDenominator: return "BadDenominator";
    case Errc::kOutOfRange: return "OutOfRange";
    case Errc::kInvalidArgument: return "InvalidArgument";
    case Errc::kInvalidM: return "InvalidM";
    case Errc::kUnknownCheck: return "UnknownCheck";
    case Errc::kIo: return "Io";
    case Errc::kInternal: return "Internal";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

}  // namespace gctc
