#include "gctc/modnt.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>

namespace gctc {

BigRat make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(Errc::kDivisionByZero, "rational with zero denominator");
  BigRat r(num, den);
  r.canonicalize();
  return r;
}

BigInt ipow(const BigInt& x, unsigned long n) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), x.get_mpz_t(), n);
  return r;
}

BigRat ipow(const BigRat& x, unsigned long n) {
  BigRat r(ipow(x.get_num(), n), ipow(x.get_den(), n));
  return r;
}

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

// --- Modulus -----------------------------------------------------------------

Modulus make_modulus(std::int64_t p, int e) {
  if (p < 3 || !is_prime(static_cast<std::uint64_t>(p)) || p % 2 == 0) {
    throw Error(Errc::kNotPrime, std::to_string(p) + " is not an odd prime");
  }
  if (e < 1 || e > kMaxExponent) {
    throw Error(Errc::kBadExponent, "exponent " + std::to_string(e) + " not in {1,2,3}");
  }
  constexpr unsigned __int128 kLimit = static_cast<unsigned __int128>(1) << 63;
  unsigned __int128 pe = 1;
  for (int i = 0; i < e; ++i) {
    pe *= static_cast<std::uint64_t>(p);
    if (pe >= kLimit) throw Error(Errc::kModulusTooLarge, "p^e must be below 2^63");
  }
  return Modulus(static_cast<std::uint64_t>(p), e, static_cast<std::uint64_t>(pe));
}

Modulus Modulus::with_exponent(int e) const {
  if (e == e_) return *this;
  if (e < 1 || e > kMaxExponent) {
    throw Error(Errc::kBadExponent, "exponent " + std::to_string(e) + " not in {1,2,3}");
  }
  unsigned __int128 pe = 1;
  for (int i = 0; i < e; ++i) pe *= p_;
  if (pe >= (static_cast<unsigned __int128>(1) << 63)) {
    throw Error(Errc::kModulusTooLarge, "p^e must be below 2^63");
  }
  return Modulus(p_, e, static_cast<std::uint64_t>(pe));
}

std::uint64_t Modulus::reduce(std::int64_t v) const noexcept {
  const auto m = static_cast<std::int64_t>(pe_);
  std::int64_t r = v % m;
  if (r < 0) r += m;
  return static_cast<std::uint64_t>(r);
}

std::uint64_t Modulus::reduce(const BigInt& v) const {
  return mpz_fdiv_ui(v.get_mpz_t(), pe_);
}

// --- Residue -----------------------------------------------------------------

namespace {

void require_same(const Modulus& a, const Modulus& b) {
  if (!(a == b)) {
    throw Error(Errc::kModulusMismatch,
                "p^e " + std::to_string(a.pe()) + " vs " + std::to_string(b.pe()));
  }
}

}  // namespace

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t n, std::uint64_t m) noexcept {
  std::uint64_t r = 1 % m;
  a %= m;
  while (n > 0) {
    if (n & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    n >>= 1;
  }
  return r;
}

Residue& Residue::operator+=(const Residue& o) {
  require_same(mod_, o.mod_);
  // pe < 2^63, so the sum cannot wrap.
  value_ += o.value_;
  if (value_ >= mod_.pe()) value_ -= mod_.pe();
  return *this;
}

Residue& Residue::operator-=(const Residue& o) {
  require_same(mod_, o.mod_);
  value_ = value_ >= o.value_ ? value_ - o.value_ : value_ + (mod_.pe() - o.value_);
  return *this;
}

Residue& Residue::operator*=(const Residue& o) {
  require_same(mod_, o.mod_);
  value_ = mulmod(value_, o.value_, mod_.pe());
  return *this;
}

Residue operator-(const Residue& a) {
  return Residue(a.mod_, a.value_ == 0 ? 0 : a.mod_.pe() - a.value_);
}

Residue inverse(const Residue& a) {
  if (!a.is_unit()) {
    throw Error(Errc::kNotInvertible,
                std::to_string(a.value()) + " mod " + std::to_string(a.modulus().pe()));
  }
  // Extended Euclid over signed 128-bit to stay clear of overflow.
  __int128 r0 = static_cast<__int128>(a.modulus().pe()), r1 = a.value();
  __int128 s0 = 0, s1 = 1;
  while (r1 != 0) {
    const __int128 q = r0 / r1;
    const __int128 r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    const __int128 s2 = s0 - q * s1;
    s0 = s1;
    s1 = s2;
  }
  const auto m = static_cast<__int128>(a.modulus().pe());
  __int128 x = s0 % m;
  if (x < 0) x += m;
  return Residue(a.modulus(), static_cast<std::uint64_t>(x));
}

Residue pow(const Residue& a, std::uint64_t n) {
  return Residue(a.modulus(), powmod(a.value(), n, a.modulus().pe()));
}

Residue divide(const Residue& a, const Residue& b) { return a * inverse(b); }

Residue to_residue(const BigRat& x, const Modulus& mod) {
  const std::uint64_t den = mod.reduce(x.get_den());
  if (den % mod.p() == 0) {
    throw Error(Errc::kBadDenominator, "p divides the denominator of " + x.get_str());
  }
  return Residue(mod, mod.reduce(x.get_num())) * inverse(Residue(mod, den));
}

std::uint64_t least_nonneg_residue(const BigRat& x, const Modulus& mod) {
  if (mod.e() != 1) {
    throw Error(Errc::kInvalidArgument, "least nonnegative residue is taken modulo p only");
  }
  return to_residue(x, mod).value();
}

// --- primality ---------------------------------------------------------------

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  static constexpr std::array<std::uint64_t, 12> kWitnesses = {2, 3, 5, 7, 11, 13,
                                                               17, 19, 23, 29, 31, 37};
  for (std::uint64_t q : kWitnesses) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These witnesses are deterministic for all n < 3.3 * 10^24.
  for (std::uint64_t a : kWitnesses) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// --- symbols and quotients ---------------------------------------------------

namespace {

int jacobi(std::uint64_t a, std::uint64_t n) {
  int t = 1;
  a %= n;
  while (a != 0) {
    while ((a & 1) == 0) {
      a >>= 1;
      const std::uint64_t r = n & 7;
      if (r == 3 || r == 5) t = -t;
    }
    std::swap(a, n);
    if ((a & 3) == 3 && (n & 3) == 3) t = -t;
    a %= n;
  }
  return n == 1 ? t : 0;
}

void require_odd_prime(std::uint64_t p) {
  if (p < 3 || p % 2 == 0 || !is_prime(p)) {
    throw Error(Errc::kNotPrime, std::to_string(p) + " is not an odd prime");
  }
}

}  // namespace

int legendre(std::int64_t a, std::uint64_t p) {
  require_odd_prime(p);
  const auto m = static_cast<std::int64_t>(p);
  std::int64_t r = a % m;
  if (r < 0) r += m;
  return jacobi(static_cast<std::uint64_t>(r), p);
}

int legendre(const BigInt& a, std::uint64_t p) {
  require_odd_prime(p);
  return jacobi(mpz_fdiv_ui(a.get_mpz_t(), p), p);
}

int valuation(std::uint64_t n, std::uint64_t p) noexcept {
  int v = 0;
  while (n != 0 && n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

int valuation(const BigInt& n, std::uint64_t p) {
  if (n == 0) throw Error(Errc::kInvalidArgument, "valuation of zero");
  BigInt q = n;
  int v = 0;
  while (mpz_divisible_ui_p(q.get_mpz_t(), p)) {
    mpz_divexact_ui(q.get_mpz_t(), q.get_mpz_t(), p);
    ++v;
  }
  return v;
}

namespace {

// Divides a residue mod p^2 that is known to be 0 mod p by p, landing mod p.
Residue exact_div_p(const Residue& r, const Modulus& mod_p, const char* what) {
  if (r.value() % mod_p.p() != 0) {
    throw Error(Errc::kInternal, std::string(what) + ": numerator not divisible by p");
  }
  return Residue(mod_p, r.value() / mod_p.p());
}

}  // namespace

Residue fermat_quotient(std::int64_t a, std::uint64_t p) {
  const Modulus mod_p = make_modulus(static_cast<std::int64_t>(p), 1);
  const Modulus mod_p2 = mod_p.with_exponent(2);
  const Residue base = Residue::from_int(mod_p2, a);
  if (!base.is_unit()) {
    throw Error(Errc::kNotInvertible, "p divides the base of the Fermat quotient");
  }
  return exact_div_p(pow(base, p - 1) - Residue::one(mod_p2), mod_p, "fermat_quotient");
}

Residue q_p_poly(const BigRat& x, std::uint64_t p) {
  const Modulus mod_p = make_modulus(static_cast<std::int64_t>(p), 1);
  const Modulus mod_p2 = mod_p.with_exponent(2);
  const Residue xr = to_residue(x, mod_p2);
  const Residue one = Residue::one(mod_p2);
  const Residue num = pow(xr, p) + pow(one - xr, p) - one;
  return exact_div_p(num, mod_p, "q_p_poly");
}

// --- x^2 + 4y^2 --------------------------------------------------------------

namespace {

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

X2Plus4Y2 cornacchia_x2_4y2(std::uint64_t p) {
  require_odd_prime(p);
  if (p % 4 != 1) {
    throw Error(Errc::kInvalidArgument, std::to_string(p) + " is not 1 mod 4");
  }
  if (p >= (std::uint64_t{1} << 62)) {
    throw Error(Errc::kOutOfRange, "prime too large for x^2 + 4y^2 solver");
  }
  // Square root of -1 from any quadratic non-residue.
  std::uint64_t nonres = 2;
  while (legendre(static_cast<std::int64_t>(nonres), p) != -1) ++nonres;
  std::uint64_t r = powmod(nonres, (p - 1) / 4, p);
  if (r > p / 2) r = p - r;

  // Euclid on (p, r) stops at the first remainder below sqrt(p).
  const std::uint64_t bound = isqrt(p);
  std::uint64_t a = p, b = r;
  while (b > bound) {
    const std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  const std::uint64_t rest = p - b * b;
  const std::uint64_t c = isqrt(rest);
  if (c * c != rest) throw Error(Errc::kInternal, "two-squares descent failed");

  // p = b^2 + c^2 with exactly one of b, c even.
  std::uint64_t odd = b, even = c;
  if (odd % 2 == 0) std::swap(odd, even);
  auto x = static_cast<std::int64_t>(odd);
  if (x % 4 != 1) x = -x;
  return {x, static_cast<std::int64_t>(even / 2)};
}

}  // namespace gctc
