#include "gctc/valued.hpp"

#include <algorithm>
#include <string>

namespace gctc {

namespace {

std::uint64_t ipow_u(std::uint64_t p, int n) {
  std::uint64_t r = 1;
  for (int i = 0; i < n; ++i) r *= p;
  return r;
}

}  // namespace

ValuedResidue ValuedResidue::exact_zero(const Modulus& mod) {
  return ValuedResidue(true, 0, Residue::zero(mod), kExact);
}

ValuedResidue ValuedResidue::approx_zero(const Modulus& mod, int prec) {
  return ValuedResidue(true, 0, Residue::zero(mod), std::max(prec, 0));
}

ValuedResidue ValuedResidue::from_int(const Modulus& mod, std::int64_t v) {
  return from_int(mod, big(v));
}

ValuedResidue ValuedResidue::from_int(const Modulus& mod, const BigInt& v) {
  if (v == 0) return exact_zero(mod);
  BigInt q = v;
  int val = 0;
  while (mpz_divisible_ui_p(q.get_mpz_t(), mod.p())) {
    mpz_divexact_ui(q.get_mpz_t(), q.get_mpz_t(), mod.p());
    ++val;
  }
  return ValuedResidue(false, val, Residue::from_int(mod, q), val + mod.e());
}

ValuedResidue ValuedResidue::from_residue(const Residue& r) {
  const Modulus& mod = r.modulus();
  if (r.is_zero()) return approx_zero(mod, mod.e());
  std::uint64_t u = r.value();
  int val = 0;
  while (u % mod.p() == 0) {
    u /= mod.p();
    ++val;
  }
  return ValuedResidue(false, val, Residue(mod, u), mod.e());
}

ValuedResidue ValuedResidue::from_parts(const Modulus& mod, int val, std::uint64_t unit) {
  if (val < 0) throw Error(Errc::kNegativeValuation, "negative valuation");
  if (unit % mod.p() == 0) throw Error(Errc::kInvalidArgument, "unit part divisible by p");
  return ValuedResidue(false, val, Residue(mod, unit), val + mod.e());
}

Residue ValuedResidue::to_residue(int target_e) const {
  const Modulus target = modulus().with_exponent(target_e);
  if (target_e > modulus().e() || target_e > prec_) {
    throw Error(Errc::kPrecisionLoss, "value known mod p^" + std::to_string(prec_) +
                                          ", requested p^" + std::to_string(target_e));
  }
  if (zero_ || val_ >= target_e) return Residue::zero(target);
  return Residue(target, mulmod(ipow_u(target.p(), val_), unit_.value() % target.pe(), target.pe()));
}

ValuedResidue operator*(const ValuedResidue& a, const ValuedResidue& b) {
  const Modulus& mod = a.modulus();
  if (!(mod == b.modulus())) throw Error(Errc::kModulusMismatch, "valued residue moduli differ");
  if (a.zero_ && a.prec_ == ValuedResidue::kExact) return a;
  if (b.zero_ && b.prec_ == ValuedResidue::kExact) return b;
  if (a.zero_ || b.zero_) {
    // 0 + O(p^P) times something of valuation v is O(p^{P+v}).
    const int pa = a.zero_ ? a.prec_ : a.val_;
    const int pb = b.zero_ ? b.prec_ : b.val_;
    return ValuedResidue::approx_zero(mod, pa + pb);
  }
  const int val = a.val_ + b.val_;
  const int rel = std::min(a.prec_ - a.val_, b.prec_ - b.val_);
  return ValuedResidue(false, val, a.unit_ * b.unit_, val + rel);
}

ValuedResidue operator/(const ValuedResidue& a, const ValuedResidue& b) {
  const Modulus& mod = a.modulus();
  if (!(mod == b.modulus())) throw Error(Errc::kModulusMismatch, "valued residue moduli differ");
  if (b.zero_) throw Error(Errc::kDivisionByZero, "valued residue division by zero");
  if (a.zero_) {
    if (a.prec_ == ValuedResidue::kExact) return a;
    return ValuedResidue::approx_zero(mod, a.prec_ - b.val_);
  }
  const int val = a.val_ - b.val_;
  if (val < 0) {
    throw Error(Errc::kNegativeValuation, "quotient is not p-integral");
  }
  const int rel = std::min(a.prec_ - a.val_, b.prec_ - b.val_);
  return ValuedResidue(false, val, a.unit_ * inverse(b.unit_), val + rel);
}

ValuedResidue operator+(const ValuedResidue& a, const ValuedResidue& b) {
  const Modulus& mod = a.modulus();
  if (!(mod == b.modulus())) throw Error(Errc::kModulusMismatch, "valued residue moduli differ");
  if (a.zero_ && a.prec_ == ValuedResidue::kExact) return b;
  if (b.zero_ && b.prec_ == ValuedResidue::kExact) return a;

  const int prec = std::min(a.prec_, b.prec_);
  int vmin = prec;
  if (!a.zero_) vmin = std::min(vmin, a.val_);
  if (!b.zero_) vmin = std::min(vmin, b.val_);
  if (vmin >= prec) return ValuedResidue::approx_zero(mod, prec);

  // Digits beyond the shared precision are meaningless; sum mod p^width.
  const int width = prec - vmin;  // 1 <= width <= e
  const std::uint64_t p = mod.p();
  const std::uint64_t pw = ipow_u(p, width);
  auto shifted = [&](const ValuedResidue& x) -> std::uint64_t {
    if (x.zero_ || x.val_ - vmin >= width) return 0;
    return mulmod(ipow_u(p, x.val_ - vmin), x.unit_.value() % pw, pw);
  };
  std::uint64_t s = (shifted(a) + shifted(b)) % pw;
  if (s == 0) return ValuedResidue::approx_zero(mod, prec);
  int j = 0;
  while (s % p == 0) {
    s /= p;
    ++j;
  }
  return ValuedResidue(false, vmin + j, Residue(mod, s), prec);
}

ValuedResidue operator-(const ValuedResidue& a) {
  if (a.zero_) return a;
  return ValuedResidue(false, a.val_, -a.unit_, a.prec_);
}

ValuedResidue operator-(const ValuedResidue& a, const ValuedResidue& b) { return a + (-b); }

}  // namespace gctc
