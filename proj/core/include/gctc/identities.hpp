#pragma once

// Exact verifiers for the polynomial/rational identities behind the
// congruences, plus modular verifiers for the auxiliary congruences used in
// the proofs. Each returns a report carrying both sides, rendered exactly.

#include <cstdint>
#include <string>

#include "gctc/exact.hpp"
#include "gctc/sequences.hpp"

namespace gctc {

// a + b * sqrt(rad), with rad fixed per computation.
class QuadExtRat {
 public:
  QuadExtRat(BigRat a, BigRat b, std::int64_t rad);

  const BigRat& rational_part() const noexcept { return a_; }
  const BigRat& radical_part() const noexcept { return b_; }
  std::int64_t rad() const noexcept { return rad_; }

  QuadExtRat conjugate() const { return QuadExtRat(a_, -b_, rad_); }

  friend QuadExtRat operator+(const QuadExtRat& x, const QuadExtRat& y);
  friend QuadExtRat operator-(const QuadExtRat& x, const QuadExtRat& y);
  friend QuadExtRat operator*(const QuadExtRat& x, const QuadExtRat& y);
  friend bool operator==(const QuadExtRat& x, const QuadExtRat& y);

  std::string str() const;

 private:
  BigRat a_;
  BigRat b_;
  std::int64_t rad_;
};

struct IdentityReport {
  std::string id;
  std::string params;
  bool holds = false;
  std::string lhs;
  std::string rhs;
};

// T_n(b,c)^2 = sum_k C(n+k,2k) C(2k,k)^2 c^k d^{n-k}.
IdentityReport verify_clausen_square(unsigned n, const TrinomialParams& params);

// sum_k C(n,k) H_k x^k = (1+x)^n H_n - sum_{k=1}^n (1+x)^{n-k}/k.
IdentityReport verify_harmonic_identity(unsigned n, const BigRat& x);
// Both sides of the harmonic identity satisfy
//   -(n+1)(x+1)^2 S_n + (2n+3)(x+1) S_{n+1} - (n+2) S_{n+2} = -x.
IdentityReport verify_harmonic_recurrence(unsigned n, const BigRat& x);

// sum_{k<=n} x^k / C(n,k) in closed form; x != -1.
IdentityReport verify_known_inverse_binom(unsigned n, const BigRat& x);

// sum_{k<n} x^k / C(2n-1,k): the two closed forms and the bridging step
// between them; n >= 1, x != -1.
IdentityReport verify_lemma3(unsigned n, const BigRat& x);
// First-order inhomogeneous certificate shared by both sides of the
// intermediate form; n >= 1, x != -1.
IdentityReport verify_lemma3_recurrence(unsigned n, const BigRat& x);

// Double sum over C(n,l)C(n+l,l)(-1)^l against the difference of two
// truncated logarithms; requires d m (m+d) != 0.
IdentityReport verify_lemma4(unsigned n, std::int64_t m, std::int64_t d);
// Four-term certificate for both sides, at index n >= 0.
IdentityReport verify_lemma4_recurrence(unsigned n, std::int64_t m, std::int64_t d);

// T_n(b,c) = sqrt(d)^n P_n(b / sqrt(d)), evaluated in Q(sqrt(d)); d != 0.
IdentityReport verify_legendre_connection(unsigned n, const TrinomialParams& params);

// Mod-p congruences.

// First finite polylogarithm against Q_p: Li_1(x) = -Q_p(x) mod p, p not
// dividing x(1-x).
IdentityReport verify_lemma5(std::uint64_t p, const BigRat& x);
// sum_{k=1}^{(p-1)/2} (1-x)^k/k = H_{(p-1)/2} + S_{p-1}(x/4) mod p.
IdentityReport verify_lemma6(std::uint64_t p, const BigRat& x);

// Mod-p^2 congruences.

// For 1 <= l <= (p-1)/2:
//   C(p-2l-1, k) = C(-2l-1, k) (1 - p(H_{2l+k} - H_{2l}))  for 0 <= k <= p-2l-1
//   C(p+k, 2l)   = (p/2l) (-1)^{k+1} / C(2l-1, k)          for 0 <= k <= l-1
// Each applicable congruence is checked.
IdentityReport verify_transition_binomials(std::uint64_t p, std::uint64_t l, std::uint64_t k);

// C((p-1)/2, l) C((p-1)/2 + l, l) (-1)^l = C(2l,l)^2 / 16^l  mod p^2.
IdentityReport verify_sun_lemma31(std::uint64_t p, std::uint64_t l);

// H_{p-1} = 0 mod p^2 for p > 3, checked on the exact numerator.
IdentityReport verify_wolstenholme(std::uint64_t p);

}  // namespace gctc
