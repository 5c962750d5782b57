#pragma once

#include <cstdint>

#include <gmpxx.h>

namespace gctc {

using BigInt = mpz_class;
using BigRat = mpq_class;

inline BigInt big(std::int64_t v) { return BigInt(static_cast<long>(v)); }

// Reduced fraction num/den with positive denominator. Throws on den == 0.
BigRat make_rational(const BigInt& num, const BigInt& den);
inline BigRat make_rational(std::int64_t num, std::int64_t den) {
  return make_rational(big(num), big(den));
}

// x^n for n >= 0 with 0^0 = 1.
BigInt ipow(const BigInt& x, unsigned long n);
BigRat ipow(const BigRat& x, unsigned long n);

// Exact binomial coefficient; zero outside 0 <= k <= n.
BigInt binomial(long n, long k);

}  // namespace gctc
