#pragma once

// Per-prime verification of the supercongruences for sums of squared
// generalized central trinomial coefficients, and of the imported
// congruences they rest on. Every check is a pure function of its
// parameters and the prime.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gctc/modnt.hpp"
#include "gctc/sequences.hpp"

namespace gctc {

struct CheckVerdict {
  std::string check;
  std::uint64_t p = 0;
  std::optional<std::int64_t> b;
  std::optional<std::int64_t> c;
  std::optional<std::int64_t> m;
  std::optional<std::int64_t> t;
  int e = 0;  // exponent the verdict is stated at
  std::uint64_t lhs = 0;
  std::uint64_t rhs = 0;
  // Unset iff the cell was skipped.
  std::optional<bool> holds;
  std::optional<std::string> skip_reason;
  // Further residues participating in multi-way checks, by name.
  std::vector<std::pair<std::string, std::int64_t>> extra;

  bool passed() const { return holds.value_or(false); }
  bool failed() const { return holds.has_value() && !*holds; }
  bool skipped() const { return !holds.has_value(); }
};

// Integer roots of (m - d)^2 = 16 m c, ascending and deduplicated.
std::vector<std::int64_t> solve_m(const TrinomialParams& params);

// sum_{k<p} T_k(b,c)^2 / m^k mod p^e. Requires p not dividing m.
Residue trinomial_square_sum(const TrinomialParams& params, std::int64_t m, const Modulus& mod);

// sum_{k<p} C(2k,k)^2 / m^k mod p^e, vanishing tail tracked by valuation.
Residue central_square_sum(std::int64_t m, const Modulus& mod);

// sum T_k^2/(-d)^k = sum_{l<=(p-1)/2} C(2l,l)^2 (-c/(4d))^l  mod p^2; p not | d.
CheckVerdict check_thm_i(const TrinomialParams& params, std::uint64_t p);

// For (m-d)^2 = 16mc and p not | m d (m-d):
//   sum T_k^2/m^k = (-1/p) + p d/(d-m) (-1/p)
//                   (q_p(d) - q_p(m) + S((m+d)/4m) - S((m+d)/4d))  mod p^2.
// Throws kInvalidM when m does not satisfy the defining equation.
CheckVerdict check_thm_ii(const TrinomialParams& params, std::int64_t m, std::uint64_t p);

// sum T_k^2/d^k = (16c/d)^{(p-1)/2}
//                 + p sum_{k != (p-1)/2} C(2k,k)/(2k+1) (-c/d)^k  mod p^3; p > 3.
CheckVerdict check_eq_1_3(const TrinomialParams& params, std::uint64_t p);

// sum T_k(2,-1)^2 / 8^k = (-2/p)  mod p^2.
CheckVerdict check_eq_1_4(std::uint64_t p);

// sum T_k(2,2)^2/4^k = sum C(2k,k)^2/8^k = closed form  mod p^2.
CheckVerdict check_cor_1_7(std::uint64_t p);

// sum T_k(2,-1)^2/(-8)^k = 2x - p/(2x) or 0  mod p^2.
CheckVerdict check_cor_1_8(std::uint64_t p);

// sum T_k(4,1)^2/4^k = sum T_k(4,1)^2/36^k = (-1/p)  mod p^2; p > 3.
CheckVerdict check_cor_1_9(std::uint64_t p);

// sum T_k(2,2)^2/4^k = sum C(2k,k)^2/8^k  mod p^3 for p = 1 (mod 4), and
// mod p^2 otherwise.
CheckVerdict check_conj_5_4(std::uint64_t p);

// sum C(2k,k)^2/16^k = (-1/p)  mod p^2.
CheckVerdict check_mortenson(std::uint64_t p);

// sum_{k=1}^{p-1} C(2k,k)/(k (-t)^k) = (2t^p - 2V_p(t))/(pt)  mod p.
CheckVerdict check_sun_tauraso(std::int64_t t, std::uint64_t p);

// S_{p-1}((m+d)/4m) and S_{p-1}((m+d)/4d) against their V_p closed forms
// (both vanish when p | m+d).
CheckVerdict check_s_closed_forms(std::int64_t m, std::int64_t d, std::uint64_t p);

// sum T_k(b,g^2)^2/(b-2g)^{2k} = (-g^2/p) mod p, and the mod p^2 value
// predicted by check_thm_ii when that applies.
CheckVerdict check_bc2_family(std::int64_t b, std::int64_t gamma, std::uint64_t p);

}  // namespace gctc
