#pragma once

#include <cstdint>
#include <limits>

#include "gctc/exact.hpp"
#include "gctc/modnt.hpp"

namespace gctc {

// p^val * unit with unit coprime to p, plus the absolute precision the value
// is known to: the represented p-adic number is determined modulo
// p^precision(). Quantities such as C(2k,k) for (p+1)/2 <= k <= p-1 vanish
// mod p yet keep their unit part here.
//
// Exact zero carries unbounded precision. Zeros produced by cancellation
// carry the precision of the operands.
class ValuedResidue {
 public:
  static constexpr int kExact = std::numeric_limits<int>::max() / 4;

  static ValuedResidue exact_zero(const Modulus& mod);
  static ValuedResidue from_int(const Modulus& mod, std::int64_t v);
  static ValuedResidue from_int(const Modulus& mod, const BigInt& v);
  // Value known modulo p^e.
  static ValuedResidue from_residue(const Residue& r);
  // Throws kInvalidArgument when p | unit.
  static ValuedResidue from_parts(const Modulus& mod, int val, std::uint64_t unit);

  bool is_zero() const noexcept { return zero_; }
  int val() const noexcept { return val_; }
  const Residue& unit() const noexcept { return unit_; }
  int precision() const noexcept { return prec_; }
  const Modulus& modulus() const noexcept { return unit_.modulus(); }

  // p^val * unit mod p^target_e, 1 <= target_e <= e. Throws kPrecisionLoss
  // when the value is not determined to that many digits.
  Residue to_residue(int target_e) const;
  Residue to_residue() const { return to_residue(modulus().e()); }

  friend ValuedResidue operator*(const ValuedResidue& a, const ValuedResidue& b);
  friend ValuedResidue operator/(const ValuedResidue& a, const ValuedResidue& b);
  friend ValuedResidue operator+(const ValuedResidue& a, const ValuedResidue& b);
  friend ValuedResidue operator-(const ValuedResidue& a, const ValuedResidue& b);
  friend ValuedResidue operator-(const ValuedResidue& a);

  ValuedResidue& operator*=(const ValuedResidue& o) { return *this = *this * o; }
  ValuedResidue& operator/=(const ValuedResidue& o) { return *this = *this / o; }
  ValuedResidue& operator+=(const ValuedResidue& o) { return *this = *this + o; }
  ValuedResidue& operator-=(const ValuedResidue& o) { return *this = *this - o; }

 private:
  ValuedResidue(bool zero, int val, Residue unit, int prec)
      : zero_(zero), val_(val), unit_(unit), prec_(prec) {}

  static ValuedResidue approx_zero(const Modulus& mod, int prec);

  bool zero_;
  int val_;
  Residue unit_;
  int prec_;
};

}  // namespace gctc
