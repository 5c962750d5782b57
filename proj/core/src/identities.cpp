#include "gctc/identities.hpp"

#include <functional>
#include <string>

#include "gctc/modnt.hpp"
#include "gctc/valued.hpp"

namespace gctc {

// --- QuadExtRat --------------------------------------------------------------

QuadExtRat::QuadExtRat(BigRat a, BigRat b, std::int64_t rad)
    : a_(std::move(a)), b_(std::move(b)), rad_(rad) {
  a_.canonicalize();
  b_.canonicalize();
}

namespace {

void require_same_rad(const QuadExtRat& x, const QuadExtRat& y) {
  if (x.rad() != y.rad()) throw Error(Errc::kInvalidArgument, "mixed radicands");
}

}  // namespace

QuadExtRat operator+(const QuadExtRat& x, const QuadExtRat& y) {
  require_same_rad(x, y);
  return QuadExtRat(x.a_ + y.a_, x.b_ + y.b_, x.rad_);
}

QuadExtRat operator-(const QuadExtRat& x, const QuadExtRat& y) {
  require_same_rad(x, y);
  return QuadExtRat(x.a_ - y.a_, x.b_ - y.b_, x.rad_);
}

QuadExtRat operator*(const QuadExtRat& x, const QuadExtRat& y) {
  require_same_rad(x, y);
  const BigRat r(big(x.rad_));
  return QuadExtRat(x.a_ * y.a_ + r * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_, x.rad_);
}

bool operator==(const QuadExtRat& x, const QuadExtRat& y) {
  return x.rad_ == y.rad_ && x.a_ == y.a_ && x.b_ == y.b_;
}

std::string QuadExtRat::str() const {
  return a_.get_str() + " + (" + b_.get_str() + ")*sqrt(" + std::to_string(rad_) + ")";
}

// --- helpers -----------------------------------------------------------------

namespace {

std::string params_of(const TrinomialParams& t) {
  return "b=" + std::to_string(t.b()) + ",c=" + std::to_string(t.c());
}

std::string params_of(unsigned n, const BigRat& x) {
  return "n=" + std::to_string(n) + ",x=" + x.get_str();
}

IdentityReport exact_report(std::string id, std::string params, const BigRat& lhs,
                            const BigRat& rhs) {
  return {std::move(id), std::move(params), lhs == rhs, lhs.get_str(), rhs.get_str()};
}

IdentityReport modular_report(std::string id, std::string params, const Residue& lhs,
                              const Residue& rhs) {
  return {std::move(id), std::move(params), lhs == rhs, std::to_string(lhs.value()),
          std::to_string(rhs.value())};
}

void require_not_minus_one(const BigRat& x) {
  if (x == -1) throw Error(Errc::kInvalidArgument, "x = -1 is excluded");
}

BigRat inv_binomial(long n, long k) { return BigRat(BigInt(1), binomial(n, k)); }

}  // namespace

// --- Clausen-derived square --------------------------------------------------

IdentityReport verify_clausen_square(unsigned n, const TrinomialParams& params) {
  const BigInt t = trinomial_exact(n, params);
  const BigInt c = big(params.c());
  const BigInt d = big(params.d());
  BigInt rhs = 0;
  for (unsigned k = 0; k <= n; ++k) {
    const BigInt cb = binomial(2 * k, k);
    rhs += binomial(n + k, 2 * k) * cb * cb * ipow(c, k) * ipow(d, n - k);
  }
  return exact_report("clausen_square", "n=" + std::to_string(n) + "," + params_of(params),
                      BigRat(t * t), BigRat(rhs));
}

// --- harmonic identity -------------------------------------------------------

namespace {

BigRat harmonic_sum_side(unsigned n, const BigRat& x) {
  BigRat s = 0;
  BigRat h = 0;
  for (unsigned k = 0; k <= n; ++k) {
    if (k > 0) h += BigRat(1, k);
    s += BigRat(binomial(n, k)) * h * ipow(x, k);
  }
  return s;
}

BigRat harmonic_closed_side(unsigned n, const BigRat& x) {
  const BigRat y = 1 + x;
  BigRat s = ipow(y, n) * harmonic_exact(n);
  for (unsigned k = 1; k <= n; ++k) s -= ipow(y, n - k) / BigRat(k);
  return s;
}

}  // namespace

IdentityReport verify_harmonic_identity(unsigned n, const BigRat& x) {
  return exact_report("harmonic_identity", params_of(n, x), harmonic_sum_side(n, x),
                      harmonic_closed_side(n, x));
}

IdentityReport verify_harmonic_recurrence(unsigned n, const BigRat& x) {
  const auto certificate = [&](const std::function<BigRat(unsigned)>& s) -> BigRat {
    const BigRat y = x + 1;
    return -BigRat(n + 1) * y * y * s(n) + BigRat(2 * n + 3) * y * s(n + 1) -
           BigRat(n + 2) * s(n + 2);
  };
  const BigRat via_sum = certificate([&](unsigned m) { return harmonic_sum_side(m, x); });
  const BigRat via_closed = certificate([&](unsigned m) { return harmonic_closed_side(m, x); });
  const BigRat target = -x;
  IdentityReport r{"harmonic_recurrence", params_of(n, x), via_sum == target && via_closed == target,
                   via_sum.get_str() + " | " + via_closed.get_str(), target.get_str()};
  return r;
}

// --- inverse binomial sums ---------------------------------------------------

IdentityReport verify_known_inverse_binom(unsigned n, const BigRat& x) {
  require_not_minus_one(x);
  BigRat lhs = 0;
  for (unsigned k = 0; k <= n; ++k) lhs += ipow(x, k) * inv_binomial(n, k);
  const BigRat y = x / (x + 1);
  BigRat inner = 0;
  for (unsigned k = 1; k <= n + 1; ++k) {
    inner += (ipow(x, k) + 1) / (BigRat(k) * (x + 1)) * ipow(y, n + 1 - k);
  }
  return exact_report("known_inverse_binom", params_of(n, x), lhs, BigRat(n + 1) * inner);
}

namespace {

BigRat lemma3_sum_side(unsigned n, const BigRat& x) {
  BigRat s = 0;
  for (unsigned k = 0; k < n; ++k) s += ipow(x, k) * inv_binomial(2 * n - 1, k);
  return s;
}

// 2n(x-1)/(x+1)^2 sum_{k=1}^n x^k/(k C(2k,k)) (x/(x+1))^{2n-2k}
BigRat lemma3_shared_tail(unsigned n, const BigRat& x) {
  const BigRat y = x / (x + 1);
  BigRat s = 0;
  for (unsigned k = 1; k <= n; ++k) {
    s += ipow(x, k) / (BigRat(k) * BigRat(binomial(2 * k, k))) * ipow(y, 2 * n - 2 * k);
  }
  return BigRat(2 * n) * (x - 1) / ((x + 1) * (x + 1)) * s;
}

// n/(x+1)^2 sum_{k=1}^n ((4k-1)x + 2k-1)/(k(2k-1)) (x/(x+1))^{2n-2k}
BigRat lemma3_key_head(unsigned n, const BigRat& x) {
  const BigRat y = x / (x + 1);
  BigRat s = 0;
  for (unsigned k = 1; k <= n; ++k) {
    s += (BigRat(4 * k - 1) * x + BigRat(2 * k - 1)) / BigRat(k * (2 * k - 1)) *
         ipow(y, 2 * n - 2 * k);
  }
  return BigRat(n) / ((x + 1) * (x + 1)) * s;
}

// 2n/(x+1) sum_{k=1}^{2n} (1/k) (x/(x+1))^{2n-k}
BigRat lemma3_final_head(unsigned n, const BigRat& x) {
  const BigRat y = x / (x + 1);
  BigRat s = 0;
  for (unsigned k = 1; k <= 2 * n; ++k) s += ipow(y, 2 * n - k) / BigRat(k);
  return BigRat(2 * n) / (x + 1) * s;
}

BigRat lemma3_key_side(unsigned n, const BigRat& x) {
  return lemma3_key_head(n, x) + lemma3_shared_tail(n, x);
}

void require_lemma3_args(unsigned n, const BigRat& x) {
  if (n < 1) throw Error(Errc::kInvalidArgument, "n must be positive");
  require_not_minus_one(x);
}

}  // namespace

IdentityReport verify_lemma3(unsigned n, const BigRat& x) {
  require_lemma3_args(n, x);
  const BigRat lhs = lemma3_sum_side(n, x);
  const BigRat key = lemma3_key_side(n, x);
  const BigRat final_form = lemma3_final_head(n, x) + lemma3_shared_tail(n, x);
  const bool bridge = lemma3_key_head(n, x) == lemma3_final_head(n, x);
  return {"lemma3", params_of(n, x), lhs == final_form && lhs == key && bridge, lhs.get_str(),
          final_form.get_str() + " | " + key.get_str()};
}

IdentityReport verify_lemma3_recurrence(unsigned n, const BigRat& x) {
  require_lemma3_args(n, x);
  const BigRat nn(n);
  const BigRat inhom =
      -nn * (BigRat(4 * n + 3) * x + BigRat(2 * n + 1)) / BigRat(2 * n + 1) +
      BigRat(n * n + n) * (ipow(x, n + 1) - ipow(x, n + 2)) /
          (BigRat(2 * n + 1) * BigRat(binomial(2 * n, n)));
  const auto certificate = [&](BigRat (*s)(unsigned, const BigRat&)) -> BigRat {
    return BigRat(n + 1) * x * x * s(n, x) - nn * (1 + x) * (1 + x) * s(n + 1, x);
  };
  const BigRat via_sum = certificate(&lemma3_sum_side);
  const BigRat via_key = certificate(&lemma3_key_side);
  return {"lemma3_recurrence", params_of(n, x), via_sum == inhom && via_key == inhom,
          via_sum.get_str() + " | " + via_key.get_str(), inhom.get_str()};
}

// --- Lemma 4 -----------------------------------------------------------------

namespace {

void require_lemma4_args(std::int64_t m, std::int64_t d) {
  if (m == 0 || d == 0 || m + d == 0) {
    throw Error(Errc::kInvalidArgument, "lemma 4 requires d m (m+d) != 0");
  }
}

BigRat lemma4_sum_side(unsigned n, const BigRat& m, const BigRat& d) {
  const BigRat w = -(m - d) * (m - d) / (m * d);
  BigRat inner = 0;
  BigRat s = 0;
  for (unsigned l = 1; l <= n; ++l) {
    inner += ipow(w, l) / (BigRat(l) * BigRat(binomial(2 * l, l)));
    const BigRat sign = (l % 2 == 0) ? 1 : -1;
    s += BigRat(binomial(n, l) * binomial(n + l, l)) * sign * inner;
  }
  return s;
}

BigRat lemma4_closed_side(unsigned n, const BigRat& m, const BigRat& d) {
  BigRat a = 0;
  BigRat b = 0;
  for (unsigned k = 1; k <= n; ++k) {
    a += ipow(-d / m, k) / BigRat(k);
    b += ipow(-m / d, k) / BigRat(k);
  }
  const BigRat sign = (n % 2 == 0) ? 1 : -1;
  return (d - m) / (d + m) * sign * (a - b);
}

std::string lemma4_params(unsigned n, std::int64_t m, std::int64_t d) {
  return "n=" + std::to_string(n) + ",m=" + std::to_string(m) + ",d=" + std::to_string(d);
}

}  // namespace

IdentityReport verify_lemma4(unsigned n, std::int64_t m, std::int64_t d) {
  require_lemma4_args(m, d);
  const BigRat mm(big(m)), dd(big(d));
  return exact_report("lemma4", lemma4_params(n, m, d), lemma4_sum_side(n, mm, dd),
                      lemma4_closed_side(n, mm, dd));
}

IdentityReport verify_lemma4_recurrence(unsigned n, std::int64_t m, std::int64_t d) {
  require_lemma4_args(m, d);
  const BigRat mm(big(m)), dd(big(d)), nn(n);
  const BigRat md = mm * dd;
  const BigRat c0 = md * (nn + 1);
  const BigRat c1 = -2 * dd * dd + md - 2 * mm * mm - dd * dd * nn + md * nn - mm * mm * nn;
  const BigRat c2 = -2 * dd * dd + 3 * md - 2 * mm * mm - dd * dd * nn + md * nn - mm * mm * nn;
  const BigRat c3 = md * (nn + 3);
  const auto certificate = [&](BigRat (*s)(unsigned, const BigRat&, const BigRat&)) -> BigRat {
    return c0 * s(n, mm, dd) + c1 * s(n + 1, mm, dd) + c2 * s(n + 2, mm, dd) +
           c3 * s(n + 3, mm, dd);
  };
  const BigRat via_sum = certificate(&lemma4_sum_side);
  const BigRat via_closed = certificate(&lemma4_closed_side);
  return {"lemma4_recurrence", lemma4_params(n, m, d), via_sum == 0 && via_closed == 0,
          via_sum.get_str() + " | " + via_closed.get_str(), "0"};
}

// --- Legendre polynomial connection ------------------------------------------

IdentityReport verify_legendre_connection(unsigned n, const TrinomialParams& params) {
  const std::int64_t d = params.d();
  if (d == 0) throw Error(Errc::kInvalidArgument, "d = 0 has no square root to divide by");
  const QuadExtRat one(1, 0, d);
  // b / sqrt(d) = (b/d) sqrt(d)
  const QuadExtRat y(0, make_rational(params.b(), d), d);
  const QuadExtRat z = (y - one) * QuadExtRat(BigRat(1, 2), 0, d);

  QuadExtRat legendre_p(0, 0, d);
  QuadExtRat zk = one;
  for (unsigned k = 0; k <= n; ++k) {
    legendre_p = legendre_p + QuadExtRat(BigRat(binomial(n, k) * binomial(n + k, k)), 0, d) * zk;
    zk = zk * z;
  }
  const BigInt dd = big(d);
  const QuadExtRat root_pow = (n % 2 == 0) ? QuadExtRat(BigRat(ipow(dd, n / 2)), 0, d)
                                           : QuadExtRat(0, BigRat(ipow(dd, (n - 1) / 2)), d);
  const QuadExtRat rhs = root_pow * legendre_p;
  const BigRat t(trinomial_exact(n, params));
  return {"legendre_connection", "n=" + std::to_string(n) + "," + params_of(params),
          rhs.radical_part() == 0 && rhs.rational_part() == t, t.get_str(), rhs.str()};
}

// --- mod p -------------------------------------------------------------------

IdentityReport verify_lemma5(std::uint64_t p, const BigRat& x) {
  const Modulus mod = make_modulus(static_cast<std::int64_t>(p), 1);
  const Residue xr = to_residue(x, mod);
  if (xr.is_zero() || (Residue::one(mod) - xr).is_zero()) {
    throw Error(Errc::kInvalidArgument, "lemma 5 requires p not dividing x(1-x)");
  }
  return modular_report("lemma5", "p=" + std::to_string(p) + ",x=" + x.get_str(),
                        polylog_finite(1, x, p), -q_p_poly(x, p));
}

IdentityReport verify_lemma6(std::uint64_t p, const BigRat& x) {
  const Modulus mod = make_modulus(static_cast<std::int64_t>(p), 1);
  const Residue one_minus_x = Residue::one(mod) - to_residue(x, mod);
  const std::uint64_t half = (p - 1) / 2;
  Residue lhs = Residue::zero(mod);
  Residue power = Residue::one(mod);
  for (std::uint64_t k = 1; k <= half; ++k) {
    power *= one_minus_x;
    lhs += power * inverse(Residue(mod, k));
  }
  const Residue rhs = harmonic_mod(half, mod) + s_sum(x / 4, p);
  return modular_report("lemma6", "p=" + std::to_string(p) + ",x=" + x.get_str(), lhs, rhs);
}

// --- mod p^2 -----------------------------------------------------------------

IdentityReport verify_transition_binomials(std::uint64_t p, std::uint64_t l, std::uint64_t k) {
  const Modulus mod = make_modulus(static_cast<std::int64_t>(p), 2);
  const std::uint64_t half = (p - 1) / 2;
  if (l < 1 || l > half) throw Error(Errc::kOutOfRange, "l must lie in [1, (p-1)/2]");
  const bool falling = k <= p - 2 * l - 1;
  const bool upper = k + 1 <= l;
  if (!falling && !upper) throw Error(Errc::kOutOfRange, "k outside both transition ranges");

  const auto sp = static_cast<std::int64_t>(p);
  const auto sl = static_cast<std::int64_t>(l);
  const auto sk = static_cast<std::int64_t>(k);
  const Residue one = Residue::one(mod);
  const Residue pr(mod, p);
  bool holds = true;
  std::string lhs_text, rhs_text;

  if (falling) {
    const Residue lhs = binom_valued(sp - 2 * sl - 1, sk, mod).to_residue(2);
    // C(-2l-1, k) as the falling factorial prod_{j=1}^k (-2l-j)/j
    Residue gen = one;
    for (std::int64_t j = 1; j <= sk; ++j) {
      gen *= divide(Residue::from_int(mod, -2 * sl - j), Residue::from_int(mod, j));
    }
    const Residue rhs =
        gen * (one - pr * (harmonic_mod(2 * l + k, mod) - harmonic_mod(2 * l, mod)));
    holds = holds && lhs == rhs;
    lhs_text += std::to_string(lhs.value());
    rhs_text += std::to_string(rhs.value());
  }
  if (upper) {
    const Residue lhs = binom_valued(sp + sk, 2 * sl, mod).to_residue(2);
    const Residue sign = (k % 2 == 1) ? one : -one;  // (-1)^{k+1}
    const Residue denom =
        Residue(mod, 2 * l) * binom_valued(2 * sl - 1, sk, mod).to_residue(2);
    const Residue rhs = pr * sign * inverse(denom);
    holds = holds && lhs == rhs;
    if (!lhs_text.empty()) {
      lhs_text += " | ";
      rhs_text += " | ";
    }
    lhs_text += std::to_string(lhs.value());
    rhs_text += std::to_string(rhs.value());
  }
  return {"transition_binomials",
          "p=" + std::to_string(p) + ",l=" + std::to_string(l) + ",k=" + std::to_string(k), holds,
          lhs_text, rhs_text};
}

IdentityReport verify_sun_lemma31(std::uint64_t p, std::uint64_t l) {
  const Modulus mod = make_modulus(static_cast<std::int64_t>(p), 2);
  const std::uint64_t half = (p - 1) / 2;
  if (l > half) throw Error(Errc::kOutOfRange, "l must lie in [0, (p-1)/2]");
  const auto sh = static_cast<std::int64_t>(half);
  const auto sl = static_cast<std::int64_t>(l);
  Residue lhs = binom_valued(sh, sl, mod).to_residue(2) *
                binom_valued(sh + sl, sl, mod).to_residue(2);
  if (l % 2 == 1) lhs = -lhs;
  const Residue cb = binom_valued(2 * sl, sl, mod).to_residue(2);
  const Residue rhs = cb * cb * inverse(pow(Residue(mod, 16), l));
  return modular_report("sun_lemma31", "p=" + std::to_string(p) + ",l=" + std::to_string(l), lhs,
                        rhs);
}

IdentityReport verify_wolstenholme(std::uint64_t p) {
  if (p <= 3 || !is_prime(p)) {
    throw Error(Errc::kInvalidArgument, "Wolstenholme's theorem needs a prime p > 3");
  }
  const BigRat h = harmonic_exact(static_cast<unsigned>(p - 1));
  const BigInt p2 = big(static_cast<std::int64_t>(p)) * big(static_cast<std::int64_t>(p));
  const BigInt rem = h.get_num() % p2;
  return {"wolstenholme", "p=" + std::to_string(p), rem == 0,
          "num(H_{p-1}) mod p^2 = " + rem.get_str(), "0"};
}

}  // namespace gctc
