#include "gctc/congruences.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gctc/valued.hpp"

namespace gctc {

namespace {

using i128 = __int128;

CheckVerdict verdict(std::string check, std::uint64_t p, int e) {
  CheckVerdict v;
  v.check = std::move(check);
  v.p = p;
  v.e = e;
  return v;
}

CheckVerdict& with_params(CheckVerdict& v, const TrinomialParams& params) {
  v.b = params.b();
  v.c = params.c();
  return v;
}

CheckVerdict skipped(CheckVerdict v, std::string reason) {
  v.holds.reset();
  v.skip_reason = std::move(reason);
  return v;
}

CheckVerdict decided(CheckVerdict v, const Residue& lhs, const Residue& rhs, bool holds) {
  v.lhs = lhs.value();
  v.rhs = rhs.value();
  v.holds = holds;
  return v;
}

bool divides(std::uint64_t p, i128 v) { return v % static_cast<i128>(p) == 0; }

Residue legendre_residue(std::int64_t a, const Modulus& mod) {
  return Residue::from_int(mod, static_cast<std::int64_t>(legendre(a, mod.p())));
}

// p * r for r known mod p, as a residue mod p^e.
Residue lift_times_p(const Residue& r_mod_p, const Modulus& target) {
  return Residue(target, target.p() * r_mod_p.value());
}

bool is_odd_prime(std::uint64_t p) { return p >= 3 && p % 2 == 1 && is_prime(p); }

void require_odd_prime(std::uint64_t p) {
  if (!is_odd_prime(p)) throw Error(Errc::kNotPrime, std::to_string(p) + " is not an odd prime");
}

i128 isqrt128(i128 n) {
  if (n < 0) return -1;
  auto r = static_cast<i128>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// The p = 1 (mod 4) closed form 2x - p/(2x) mod p^2.
Residue two_x_form(std::uint64_t p, const Modulus& mod2, std::int64_t* x_out) {
  const X2Plus4Y2 rep = cornacchia_x2_4y2(p);
  if (x_out) *x_out = rep.x;
  const Residue two_x = Residue::from_int(mod2, 2 * rep.x);
  return two_x - Residue(mod2, p) * inverse(two_x);
}

}  // namespace

std::vector<std::int64_t> solve_m(const TrinomialParams& params) {
  // m^2 - (2d + 16c) m + d^2 = 0
  const i128 d = params.d();
  const i128 c = params.c();
  const i128 lin = 2 * d + 16 * c;
  const i128 disc = lin * lin - 4 * d * d;
  std::vector<std::int64_t> roots;
  if (disc < 0) return roots;
  const i128 s = isqrt128(disc);
  if (s * s != disc) return roots;
  for (const i128 num : {lin - s, lin + s}) {
    if (num % 2 != 0) continue;
    const i128 m = num / 2;
    if (m < INT64_MIN || m > INT64_MAX) continue;
    roots.push_back(static_cast<std::int64_t>(m));
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

Residue trinomial_square_sum(const TrinomialParams& params, std::int64_t m, const Modulus& mod) {
  const Residue m_inv = inverse(Residue::from_int(mod, m));
  const auto series = trinomial_mod_series(params, mod, mod.p());
  Residue sum = Residue::zero(mod);
  Residue scale = Residue::one(mod);
  for (const Residue& t : series.terms) {
    sum += t * t * scale;
    scale *= m_inv;
  }
  return sum;
}

Residue central_square_sum(std::int64_t m, const Modulus& mod) {
  const Residue m_inv = inverse(Residue::from_int(mod, m));
  const auto series = central_binomial_series(mod, mod.p());
  auto sum = ValuedResidue::exact_zero(mod);
  Residue scale = Residue::one(mod);
  for (const ValuedResidue& cb : series.terms) {
    sum += cb * cb * ValuedResidue::from_residue(scale);
    scale *= m_inv;
  }
  return sum.to_residue();
}

CheckVerdict check_thm_i(const TrinomialParams& params, std::uint64_t p) {
  require_odd_prime(p);
  CheckVerdict v = verdict("thm_i", p, 2);
  with_params(v, params);
  v.m = -params.d();
  if (divides(p, params.d())) return skipped(std::move(v), "p divides d");

  const Modulus mod = make_modulus(static_cast<std::int64_t>(p), 2);
  const Residue lhs = trinomial_square_sum(params, -params.d(), mod);

  const std::uint64_t half = (p - 1) / 2;
  const auto binoms = central_binomial_series(mod, half + 1);
  const Residue ratio = divide(Residue::from_int(mod, -params.c()),
                               Residue::from_int(mod, 4) * Residue::from_int(mod, params.d()));
  Residue rhs = Residue::zero(mod);
  Residue power = Residue::one(mod);
  for (std::uint64_t l = 0; l <= half; ++l) {
    const Residue cb = binoms.terms[l].to_residue();
    rhs += cb * cb * power;
    power *= ratio;
  }
  return decided(std::move(v), lhs, rhs, lhs == rhs);
}

CheckVerdict check_thm_ii(const TrinomialParams& params, std::int64_t m, std::uint64_t p) {
  require_odd_prime(p);
  const i128 d = params.d();
  const i128 diff = static_cast<i128>(m) - d;
  if (diff * diff != 16 * static_cast<i128>(m) * params.c()) {
    throw Error(Errc::kInvalidM, "m = " + std::to_string(m) + " does not satisfy (m-d)^2 = 16mc");
  }
  CheckVerdict v = verdict("thm_ii", p, 2);
  with_params(v, params);
  v.m = m;
  if (divides(p, m) || divides(p, d) || divides(p, diff)) {
    return skipped(std::move(v), "p divides m d (m-d)");
  }

  const Modulus mod2 = make_modulus(static_cast<std::int64_t>(p), 2);
  const Modulus mod1 = mod2.with_exponent(1);
  const Residue lhs = trinomial_square_sum(params, m, mod2);

  // The bracket is only meaningful mod p; it is multiplied by p.
  const std::int64_t dd = params.d();
  const Residue bracket = fermat_quotient(dd, p) - fermat_quotient(m, p) +
                          s_sum(make_rational(m + dd, 4 * m), p) -
                          s_sum(make_rational(m + dd, 4 * dd), p);
  const Residue factor = divide(Residue::from_int(mod1, dd), Residue::from_int(mod1, dd - m)) *
                         legendre_residue(-1, mod1);
  const Residue rhs = legendre_residue(-1, mod2) + lift_times_p(factor * bracket, mod2);
  return decided(std::move(v), lhs, rhs, lhs == rhs);
}

CheckVerdict check_eq_1_3(const TrinomialParams& params, std::uint64_t p) {
  require_odd_prime(p);
  CheckVerdict v = verdict("eq_1_3", p, 3);
  with_params(v, params);
  v.m = params.d();
  if (p <= 3) return skipped(std::move(v), "requires p > 3");
  if (divides(p, params.d())) return skipped(std::move(v), "p divides d");

  const Modulus mod3 = make_modulus(static_cast<std::int64_t>(p), 3);
  const Modulus mod2 = mod3.with_exponent(2);
  const Residue lhs = trinomial_square_sum(params, params.d(), mod3);

  const std::uint64_t half = (p - 1) / 2;
  const Residue head = pow(divide(Residue::from_int(mod3, 16 * params.c()),
                                  Residue::from_int(mod3, params.d())),
                           half);

  // The tail sum is needed mod p^2. Central binomials past (p-1)/2 carry one
  // factor of p, which the valued representation keeps.
  const auto binoms = central_binomial_series(mod2, p);
  const auto ratio =
      ValuedResidue::from_int(mod2, -params.c()) / ValuedResidue::from_int(mod2, params.d());
  auto tail = ValuedResidue::exact_zero(mod2);
  auto power = ValuedResidue::from_int(mod2, 1);
  for (std::uint64_t k = 0; k < p; ++k) {
    if (k != half) {
      tail += binoms.terms[k] * power /
              ValuedResidue::from_int(mod2, static_cast<std::int64_t>(2 * k + 1));
    }
    power *= ratio;
  }
  const Residue rhs = head + Residue(mod3, p * tail.to_residue(2).value());
  return decided(std::move(v), lhs, rhs, lhs == rhs);
}

CheckVerdict check_eq_1_4(std::uint64_t p) {
  require_odd_prime(p);
  const TrinomialParams params(2, -1);
  CheckVerdict v = verdict("eq_1_4", p, 2);
  with_params(v, params);
  v.m = 8;
  const Modulus mod = make_modulus(static_cast<std::int64_t>(p), 2);
  const Residue lhs = trinomial_square_sum(params, 8, mod);
  const Residue rhs = legendre_residue(-2, mod);
  return decided(std::move(v), lhs, rhs, lhs == rhs);
}

CheckVerdict check_cor_1_7(std::uint64_t p) {
  require_odd_prime(p);
  const TrinomialParams params(2, 2);
  CheckVerdict v = verdict("cor_1_7", p, 2);
  with_params(v, params);
  v.m = 4;
  const Modulus mod = make_modulus(static_cast<std::int64_t>(p), 2);
  const Residue trinomial_side = trinomial_square_sum(params, 4, mod);
  const Residue binomial_side = central_square_sum(8, mod);

  Residue closed = Residue::zero(mod);
  if (p % 4 == 1) {
    std::int64_t x = 0;
    closed = legendre_residue(2, mod) * two_x_form(p, mod, &x);
    v.extra.emplace_back("x", x);
  } else {
    const auto q = static_cast<long>((p + 1) / 4);
    const Residue binom = Residue::from_int(mod, binomial(static_cast<long>((p + 1) / 2), q));
    const Residue sign = (q % 2 == 0) ? Residue::one(mod) : -Residue::one(mod);
    closed = sign * Residue(mod, 2 * p) * inverse(binom);
  }
  v.extra.emplace_back("binomial_sum", static_cast<std::int64_t>(binomial_side.value()));
  return decided(std::move(v), trinomial_side, closed,
                 trinomial_side == binomial_side && binomial_side == closed);
}

CheckVerdict check_cor_1_8(std::uint64_t p) {
  require_odd_prime(p);
  const TrinomialParams params(2, -1);
  CheckVerdict v = verdict("cor_1_8", p, 2);
  with_params(v, params);
  v.m = -8;
  const Modulus mod = make_modulus(static_cast<std::int64_t>(p), 2);
  const Residue lhs = trinomial_square_sum(params, -8, mod);
  Residue rhs = Residue::zero(mod);
  if (p % 4 == 1) {
    std::int64_t x = 0;
    rhs = two_x_form(p, mod, &x);
    v.extra.emplace_back("x", x);
  }
  return decided(std::move(v), lhs, rhs, lhs == rhs);
}

CheckVerdict check_cor_1_9(std::uint64_t p) {
  require_odd_prime(p);
  const TrinomialParams params(4, 1);
  CheckVerdict v = verdict("cor_1_9", p, 2);
  with_params(v, params);
  v.m = 4;
  if (p <= 3) return skipped(std::move(v), "requires p > 3");
  const Modulus mod = make_modulus(static_cast<std::int64_t>(p), 2);
  const Residue over4 = trinomial_square_sum(params, 4, mod);
  const Residue over36 = trinomial_square_sum(params, 36, mod);
  const Residue rhs = legendre_residue(-1, mod);
  v.extra.emplace_back("sum_over_36", static_cast<std::int64_t>(over36.value()));
  return decided(std::move(v), over4, rhs, over4 == rhs && over36 == rhs);
}

CheckVerdict check_conj_5_4(std::uint64_t p) {
  require_odd_prime(p);
  // exponent (5 + (-1/p)) / 2
  const int e = (p % 4 == 1) ? 3 : 2;
  const TrinomialParams params(2, 2);
  CheckVerdict v = verdict("conj_5_4", p, e);
  with_params(v, params);
  v.m = 4;
  const Modulus mod = make_modulus(static_cast<std::int64_t>(p), e);
  const Residue lhs = trinomial_square_sum(params, 4, mod);
  const Residue rhs = central_square_sum(8, mod);
  return decided(std::move(v), lhs, rhs, lhs == rhs);
}

CheckVerdict check_mortenson(std::uint64_t p) {
  require_odd_prime(p);
  CheckVerdict v = verdict("mortenson", p, 2);
  v.m = 16;
  const Modulus mod = make_modulus(static_cast<std::int64_t>(p), 2);
  const Residue lhs = central_square_sum(16, mod);
  const Residue rhs = legendre_residue(-1, mod);
  return decided(std::move(v), lhs, rhs, lhs == rhs);
}

CheckVerdict check_sun_tauraso(std::int64_t t, std::uint64_t p) {
  require_odd_prime(p);
  CheckVerdict v = verdict("sun_tauraso", p, 1);
  v.t = t;
  if (divides(p, t)) return skipped(std::move(v), "p divides t");
  const Modulus mod = make_modulus(static_cast<std::int64_t>(p), 1);
  const auto binoms = central_binomial_series(mod, p);
  const auto step = ValuedResidue::from_residue(inverse(Residue::from_int(mod, -t)));
  auto sum = ValuedResidue::exact_zero(mod);
  auto power = ValuedResidue::from_int(mod, 1);
  for (std::uint64_t k = 1; k < p; ++k) {
    power *= step;
    sum += binoms.terms[k] * power / ValuedResidue::from_int(mod, static_cast<std::int64_t>(k));
  }
  const Residue lhs = sum.to_residue(1);
  const Residue rhs = sun_tauraso_rhs(t, p);
  return decided(std::move(v), lhs, rhs, lhs == rhs);
}

CheckVerdict check_s_closed_forms(std::int64_t m, std::int64_t d, std::uint64_t p) {
  require_odd_prime(p);
  CheckVerdict v = verdict("s_closed_forms", p, 1);
  v.m = m;
  v.extra.emplace_back("d", d);
  if (divides(p, m) || divides(p, d)) return skipped(std::move(v), "p divides 4md");
  const Modulus mod = make_modulus(static_cast<std::int64_t>(p), 1);
  const Residue s_m = s_sum(make_rational(m + d, 4 * m), p);
  const Residue s_d = s_sum(make_rational(m + d, 4 * d), p);
  Residue closed_m = Residue::zero(mod);
  Residue closed_d = Residue::zero(mod);
  if (!divides(p, static_cast<i128>(m) + d)) {
    const auto t_m = least_nonneg_residue(make_rational(-4 * m, m + d), mod);
    const auto t_d = least_nonneg_residue(make_rational(-4 * d, m + d), mod);
    closed_m = sun_tauraso_rhs(static_cast<std::int64_t>(t_m), p);
    closed_d = sun_tauraso_rhs(static_cast<std::int64_t>(t_d), p);
  }
  v.extra.emplace_back("s_d", static_cast<std::int64_t>(s_d.value()));
  v.extra.emplace_back("closed_d", static_cast<std::int64_t>(closed_d.value()));
  return decided(std::move(v), s_m, closed_m, s_m == closed_m && s_d == closed_d);
}

CheckVerdict check_bc2_family(std::int64_t b, std::int64_t gamma, std::uint64_t p) {
  require_odd_prime(p);
  const TrinomialParams params(b, gamma * gamma);
  const std::int64_t m = (b - 2 * gamma) * (b - 2 * gamma);
  CheckVerdict v = verdict("bc2_family", p, 1);
  with_params(v, params);
  v.m = m;
  if (divides(p, b - 2 * gamma)) return skipped(std::move(v), "p divides b - 2c");

  const Modulus mod1 = make_modulus(static_cast<std::int64_t>(p), 1);
  const Residue lhs1 = trinomial_square_sum(params, m, mod1);
  const Residue rhs1 = legendre_residue(-gamma * gamma, mod1);
  const i128 d = params.d();
  const bool lifts = !divides(p, gamma) && !divides(p, d) && !divides(p, static_cast<i128>(m) - d);
  if (!lifts) return decided(std::move(v), lhs1, rhs1, lhs1 == rhs1);

  const CheckVerdict thm = check_thm_ii(params, m, p);
  const Modulus mod2 = mod1.with_exponent(2);
  const Residue lhs2 = trinomial_square_sum(params, m, mod2);
  const Residue rhs2(mod2, thm.rhs);
  v.e = 2;
  v.extra.emplace_back("mod_p_lhs", static_cast<std::int64_t>(lhs1.value()));
  v.extra.emplace_back("mod_p_rhs", static_cast<std::int64_t>(rhs1.value()));
  return decided(std::move(v), lhs2, rhs2, lhs1 == rhs1 && lhs2 == rhs2);
}

}  // namespace gctc
