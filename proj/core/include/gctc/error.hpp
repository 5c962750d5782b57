#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gctc {

enum class Errc {
  kNotPrime,
  kBadExponent,
  kModulusTooLarge,
  kModulusMismatch,
  kNotInvertible,
  kDivisionByZero,
  kNegativeValuation,
  kPrecisionLoss,
  kBadDenominator,
  kOutOfRange,
  kInvalidArgument,
  kInvalidM,
  kUnknownCheck,
  kIo,
  kInternal,
};

std::string_view errc_name(Errc code) noexcept;

// Every failure raised by the library. The code is stable and testable; the
// message is for humans.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace gctc
