#pragma once

// Exact and modular generators for T_n(b,c), central binomials, harmonic
// numbers, V_n, S_{p-1} and finite polylogarithms.

#include <cstdint>
#include <string>
#include <vector>

#include "gctc/exact.hpp"
#include "gctc/modnt.hpp"
#include "gctc/valued.hpp"

namespace gctc {

// (b, c) with the discriminant d = b^2 - 4c.
class TrinomialParams {
 public:
  TrinomialParams(std::int64_t b, std::int64_t c);

  std::int64_t b() const noexcept { return b_; }
  std::int64_t c() const noexcept { return c_; }
  std::int64_t d() const noexcept { return d_; }

  friend bool operator==(const TrinomialParams&, const TrinomialParams&) = default;

 private:
  std::int64_t b_;
  std::int64_t c_;
  std::int64_t d_;
};

template <typename Term>
struct ModSeries {
  Modulus modulus;
  std::vector<Term> terms;
  std::string kind;
};

// T_n(b,c) = sum_k C(n,2k) C(2k,k) b^{n-2k} c^k.
BigInt trinomial_exact(unsigned n, const TrinomialParams& params);

// Coefficient of x^n in (x^2 + bx + c)^n by literal polynomial expansion.
BigInt poly_power_coeff(unsigned n, const TrinomialParams& params);

// T_0..T_{len-1} mod p^e through
//   (k+1) T_{k+1} = (2k+1) b T_k - k d T_{k-1}.
// len <= p keeps every divisor a unit.
ModSeries<Residue> trinomial_mod_series(const TrinomialParams& params, const Modulus& mod,
                                        std::uint64_t len);

// C(2k,k) for k < len <= p with exact p-adic valuation.
ModSeries<ValuedResidue> central_binomial_series(const Modulus& mod, std::uint64_t len);

// C(n,k) for n < p^2 via Legendre's formula and p-free factorial parts.
ValuedResidue binom_valued(std::int64_t n, std::int64_t k, const Modulus& mod);

BigRat harmonic_exact(unsigned n);
// H_n mod p^e; n < p.
Residue harmonic_mod(std::uint64_t n, const Modulus& mod);

// V_0 = 2, V_1 = t, V_{n+1} = t (V_n + V_{n-1}).
Residue v_poly(const Residue& t, std::uint64_t n);

// S_{p-1}(x) = sum_{k=1}^{p-1} C(2k,k) x^k / k  mod p.
Residue s_sum(const BigRat& x, std::uint64_t p);

// sum_{k=1}^{p-1} x^k / k^order  mod p.
Residue polylog_finite(unsigned order, const BigRat& x, std::uint64_t p);

// (2 t^p - 2 V_p(t)) / (p t)  mod p.
Residue sun_tauraso_rhs(std::int64_t t, std::uint64_t p);

}  // namespace gctc
