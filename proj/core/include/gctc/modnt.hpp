#pragma once

// Arithmetic modulo odd prime powers p^e (e <= 3) and the small
// number-theoretic toolkit built on it.

#include <cstdint>
#include <optional>
#include <utility>

#include "gctc/error.hpp"
#include "gctc/exact.hpp"

namespace gctc {

inline constexpr int kMaxExponent = 3;

// An odd prime p together with an exponent e in {1,2,3}; p^e < 2^63.
class Modulus {
 public:
  std::uint64_t p() const noexcept { return p_; }
  int e() const noexcept { return e_; }
  std::uint64_t pe() const noexcept { return pe_; }

  // The same prime at another exponent (1..3). No primality re-check.
  Modulus with_exponent(int e) const;

  // Canonical representative of v in [0, p^e).
  std::uint64_t reduce(std::int64_t v) const noexcept;
  std::uint64_t reduce(const BigInt& v) const;

  friend bool operator==(const Modulus&, const Modulus&) = default;

 private:
  friend Modulus make_modulus(std::int64_t p, int e);
  Modulus(std::uint64_t p, int e, std::uint64_t pe) : p_(p), e_(e), pe_(pe) {}

  std::uint64_t p_;
  int e_;
  std::uint64_t pe_;
};

Modulus make_modulus(std::int64_t p, int e);

// A residue class modulo p^e, stored canonically in [0, p^e).
class Residue {
 public:
  Residue(const Modulus& mod, std::uint64_t value) : mod_(mod), value_(value % mod.pe()) {}

  static Residue zero(const Modulus& mod) { return Residue(mod, 0); }
  static Residue one(const Modulus& mod) { return Residue(mod, 1); }
  static Residue from_int(const Modulus& mod, std::int64_t v) { return Residue(mod, mod.reduce(v)); }
  static Residue from_int(const Modulus& mod, const BigInt& v) { return Residue(mod, mod.reduce(v)); }

  std::uint64_t value() const noexcept { return value_; }
  const Modulus& modulus() const noexcept { return mod_; }
  bool is_zero() const noexcept { return value_ == 0; }
  bool is_unit() const noexcept { return value_ % mod_.p() != 0; }

  Residue& operator+=(const Residue& o);
  Residue& operator-=(const Residue& o);
  Residue& operator*=(const Residue& o);

  friend Residue operator+(Residue a, const Residue& b) { return a += b; }
  friend Residue operator-(Residue a, const Residue& b) { return a -= b; }
  friend Residue operator*(Residue a, const Residue& b) { return a *= b; }
  friend Residue operator-(const Residue& a);

  friend bool operator==(const Residue&, const Residue&) = default;

 private:
  Modulus mod_;
  std::uint64_t value_;
};

// Throws kNotInvertible when p | a.
Residue inverse(const Residue& a);
Residue pow(const Residue& a, std::uint64_t n);

// a * b^{-1}.
Residue divide(const Residue& a, const Residue& b);

// Image of a p-integral rational in Z/p^e. Throws kBadDenominator when p
// divides the denominator.
Residue to_residue(const BigRat& x, const Modulus& mod);

// <x>_p: the unique r in [0, p) with r * den = num (mod p). Only defined for
// e = 1 moduli.
std::uint64_t least_nonneg_residue(const BigRat& x, const Modulus& mod);

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept;
std::uint64_t powmod(std::uint64_t a, std::uint64_t n, std::uint64_t m) noexcept;

// Deterministic for every n < 2^64.
bool is_prime(std::uint64_t n) noexcept;

// Legendre symbol (a/p) in {-1, 0, 1}, via quadratic reciprocity.
int legendre(std::int64_t a, std::uint64_t p);
int legendre(const BigInt& a, std::uint64_t p);

// v_p(n) for n != 0.
int valuation(std::uint64_t n, std::uint64_t p) noexcept;
int valuation(const BigInt& n, std::uint64_t p);

// q_p(a) = (a^{p-1} - 1)/p mod p. Throws kNotInvertible when p | a.
Residue fermat_quotient(std::int64_t a, std::uint64_t p);

// Q_p(x) = (x^p + (1-x)^p - 1)/p mod p.
Residue q_p_poly(const BigRat& x, std::uint64_t p);

struct X2Plus4Y2 {
  std::int64_t x;
  std::int64_t y;
  friend bool operator==(const X2Plus4Y2&, const X2Plus4Y2&) = default;
};

// p = x^2 + 4y^2 with x = 1 (mod 4) and y >= 0, for primes p = 1 (mod 4).
X2Plus4Y2 cornacchia_x2_4y2(std::uint64_t p);

}  // namespace gctc
