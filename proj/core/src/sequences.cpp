#include "gctc/sequences.hpp"

#include <string>

namespace gctc {

TrinomialParams::TrinomialParams(std::int64_t b, std::int64_t c) : b_(b), c_(c) {
  const __int128 d = static_cast<__int128>(b) * b - static_cast<__int128>(4) * c;
  if (d > INT64_MAX || d < INT64_MIN) {
    throw Error(Errc::kOutOfRange, "b^2 - 4c does not fit in 64 bits");
  }
  d_ = static_cast<std::int64_t>(d);
}

BigInt trinomial_exact(unsigned n, const TrinomialParams& params) {
  const BigInt b = big(params.b());
  const BigInt c = big(params.c());
  BigInt sum = 0;
  for (unsigned k = 0; 2 * k <= n; ++k) {
    sum += binomial(n, 2 * k) * binomial(2 * k, k) * ipow(b, n - 2 * k) * ipow(c, k);
  }
  return sum;
}

BigInt poly_power_coeff(unsigned n, const TrinomialParams& params) {
  // coefficients in ascending degree
  std::vector<BigInt> poly{1};
  const BigInt b = big(params.b());
  const BigInt c = big(params.c());
  for (unsigned i = 0; i < n; ++i) {
    std::vector<BigInt> next(poly.size() + 2, BigInt(0));
    for (std::size_t j = 0; j < poly.size(); ++j) {
      next[j] += c * poly[j];
      next[j + 1] += b * poly[j];
      next[j + 2] += poly[j];
    }
    poly = std::move(next);
  }
  return poly[n];
}

ModSeries<Residue> trinomial_mod_series(const TrinomialParams& params, const Modulus& mod,
                                        std::uint64_t len) {
  if (len > mod.p()) {
    throw Error(Errc::kOutOfRange, "series length exceeds p");
  }
  ModSeries<Residue> out{mod, {}, "T(" + std::to_string(params.b()) + "," +
                                      std::to_string(params.c()) + ")"};
  out.terms.reserve(len);
  if (len == 0) return out;
  const Residue b = Residue::from_int(mod, params.b());
  const Residue d = Residue::from_int(mod, params.d());
  out.terms.push_back(Residue::one(mod));
  if (len == 1) return out;
  out.terms.push_back(b);
  for (std::uint64_t k = 1; k + 1 < len; ++k) {
    const Residue kk(mod, k);
    const Residue next = Residue(mod, 2 * k + 1) * b * out.terms[k] - kk * d * out.terms[k - 1];
    out.terms.push_back(divide(next, Residue(mod, k + 1)));
  }
  return out;
}

ModSeries<ValuedResidue> central_binomial_series(const Modulus& mod, std::uint64_t len) {
  if (len > mod.p()) {
    throw Error(Errc::kOutOfRange, "series length exceeds p");
  }
  ModSeries<ValuedResidue> out{mod, {}, "C(2k,k)"};
  out.terms.reserve(len);
  if (len == 0) return out;
  out.terms.push_back(ValuedResidue::from_int(mod, 1));
  for (std::uint64_t k = 0; k + 1 < len; ++k) {
    // C(2k+2,k+1) = C(2k,k) * 2(2k+1) / (k+1)
    const auto factor = ValuedResidue::from_int(mod, static_cast<std::int64_t>(2 * (2 * k + 1)));
    const auto divisor = ValuedResidue::from_int(mod, static_cast<std::int64_t>(k + 1));
    out.terms.push_back(out.terms.back() * factor / divisor);
  }
  return out;
}

namespace {

// Legendre's formula: v_p(n!).
std::int64_t factorial_valuation(std::int64_t n, std::uint64_t p) {
  std::int64_t v = 0;
  for (auto q = static_cast<std::int64_t>(p); q <= n; q *= static_cast<std::int64_t>(p)) {
    v += n / q;
    if (q > n / static_cast<std::int64_t>(p)) break;
  }
  return v;
}

// n! with every factor of p removed, mod p^e.
Residue factorial_unit(std::int64_t n, const Modulus& mod) {
  std::uint64_t acc = 1 % mod.pe();
  for (std::int64_t j = 2; j <= n; ++j) {
    auto u = static_cast<std::uint64_t>(j);
    while (u % mod.p() == 0) u /= mod.p();
    acc = mulmod(acc, u % mod.pe(), mod.pe());
  }
  return Residue(mod, acc);
}

}  // namespace

ValuedResidue binom_valued(std::int64_t n, std::int64_t k, const Modulus& mod) {
  if (n < 0) throw Error(Errc::kOutOfRange, "negative n in binom_valued");
  const unsigned __int128 p2 = static_cast<unsigned __int128>(mod.p()) * mod.p();
  if (static_cast<unsigned __int128>(n) >= p2) {
    throw Error(Errc::kOutOfRange, "binom_valued requires n < p^2");
  }
  if (k < 0 || k > n) return ValuedResidue::exact_zero(mod);
  const std::int64_t val = factorial_valuation(n, mod.p()) - factorial_valuation(k, mod.p()) -
                           factorial_valuation(n - k, mod.p());
  const Residue unit = divide(factorial_unit(n, mod),
                              factorial_unit(k, mod) * factorial_unit(n - k, mod));
  return ValuedResidue::from_parts(mod, static_cast<int>(val), unit.value());
}

BigRat harmonic_exact(unsigned n) {
  BigRat h = 0;
  for (unsigned k = 1; k <= n; ++k) h += BigRat(1, k);
  h.canonicalize();
  return h;
}

Residue harmonic_mod(std::uint64_t n, const Modulus& mod) {
  if (n >= mod.p()) {
    throw Error(Errc::kOutOfRange, "harmonic_mod requires n < p");
  }
  Residue h = Residue::zero(mod);
  for (std::uint64_t k = 1; k <= n; ++k) h += inverse(Residue(mod, k));
  return h;
}

Residue v_poly(const Residue& t, std::uint64_t n) {
  const Modulus& mod = t.modulus();
  Residue prev = Residue(mod, 2);
  if (n == 0) return prev;
  Residue cur = t;
  for (std::uint64_t i = 1; i < n; ++i) {
    Residue next = t * (cur + prev);
    prev = cur;
    cur = next;
  }
  return cur;
}

Residue s_sum(const BigRat& x, std::uint64_t p) {
  const Modulus mod = make_modulus(static_cast<std::int64_t>(p), 1);
  const auto xv = ValuedResidue::from_residue(to_residue(x, mod));
  const auto binoms = central_binomial_series(mod, p);
  auto sum = ValuedResidue::exact_zero(mod);
  auto power = ValuedResidue::from_int(mod, 1);
  for (std::uint64_t k = 1; k < p; ++k) {
    power *= xv;
    sum += binoms.terms[k] * power / ValuedResidue::from_int(mod, static_cast<std::int64_t>(k));
  }
  return sum.to_residue(1);
}

Residue polylog_finite(unsigned order, const BigRat& x, std::uint64_t p) {
  if (order == 0) throw Error(Errc::kInvalidArgument, "polylog order must be positive");
  const Modulus mod = make_modulus(static_cast<std::int64_t>(p), 1);
  const Residue xr = to_residue(x, mod);
  Residue sum = Residue::zero(mod);
  Residue power = Residue::one(mod);
  for (std::uint64_t k = 1; k < p; ++k) {
    power *= xr;
    sum += power * inverse(pow(Residue(mod, k), order));
  }
  return sum;
}

Residue sun_tauraso_rhs(std::int64_t t, std::uint64_t p) {
  const Modulus mod_p = make_modulus(static_cast<std::int64_t>(p), 1);
  const Modulus mod_p2 = mod_p.with_exponent(2);
  const Residue tt = Residue::from_int(mod_p2, t);
  if (!tt.is_unit()) throw Error(Errc::kNotInvertible, "p divides t");
  const Residue num = Residue(mod_p2, 2) * (pow(tt, p) - v_poly(tt, p));
  if (num.value() % p != 0) {
    throw Error(Errc::kInternal, "2t^p - 2V_p(t) not divisible by p");
  }
  const Residue quotient(mod_p, num.value() / p);
  return quotient * inverse(Residue::from_int(mod_p, t));
}

}  // namespace gctc
