#include "gctc/sequences.hpp"

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

namespace gctc {
namespace {

// T_n = sum_k C(n,k) C(n-k,k) b^{n-2k} c^k.
mpz_class trinomial_second_form(unsigned n, long b, long c) {
  mpz_class sum = 0;
  for (unsigned k = 0; 2 * k <= n; ++k) {
    mpz_class c1, c2;
    mpz_bin_uiui(c1.get_mpz_t(), n, k);
    mpz_bin_uiui(c2.get_mpz_t(), n - k, k);
    sum += c1 * c2 * oracle::power(b, n - 2 * k) * oracle::power(c, k);
  }
  return sum;
}

TEST(Trinomial, ParamsAndDiscriminant) {
  EXPECT_EQ(TrinomialParams(4, 1).d(), 12);
  EXPECT_EQ(TrinomialParams(2, 1).d(), 0);
  EXPECT_EQ(TrinomialParams(-3, -2).d(), 17);
}

TEST(Trinomial, ThreeFormsAgree) {
  for (long b = -5; b <= 5; ++b) {
    for (long c = -5; c <= 5; ++c) {
      const TrinomialParams params(b, c);
      for (unsigned n = 0; n <= 60; ++n) {
        const BigInt t = trinomial_exact(n, params);
        ASSERT_EQ(t, oracle::trinomial_multinomial(n, b, c)) << b << "," << c << " n=" << n;
        ASSERT_EQ(t, trinomial_second_form(n, b, c)) << b << "," << c << " n=" << n;
        if (n <= 40) ASSERT_EQ(t, poly_power_coeff(n, params)) << b << "," << c << " n=" << n;
      }
    }
  }
}

TEST(Trinomial, SpecialCases) {
  for (unsigned n = 0; n < 30; ++n) {
    EXPECT_EQ(trinomial_exact(n, TrinomialParams(2, 1)), oracle::central_binomial(n));
  }
  const long delannoy[] = {1, 3, 13, 63, 321, 1683, 8989};
  for (unsigned n = 0; n < 7; ++n) {
    EXPECT_EQ(trinomial_exact(n, TrinomialParams(3, 2)), delannoy[n]);
  }
  const long central_trinomial[] = {1, 1, 3, 7, 19, 51, 141, 393};
  for (unsigned n = 0; n < 8; ++n) {
    EXPECT_EQ(trinomial_exact(n, TrinomialParams(1, 1)), central_trinomial[n]);
  }
}

TEST(Trinomial, ModSeriesSmallExample) {
  const auto s = trinomial_mod_series(TrinomialParams(1, 1), make_modulus(7, 2), 7);
  ASSERT_EQ(s.terms.size(), 7u);
  const std::uint64_t want[] = {1, 1, 3, 7, 19, 2, 43};
  for (int k = 0; k < 7; ++k) EXPECT_EQ(s.terms[k].value(), want[k]) << k;
}

TEST(Trinomial, ModSeriesMatchesExact) {
  std::mt19937_64 rng(7);
  for (std::int64_t p : {7, 101, 997}) {
    for (int trial = 0; trial < 25; ++trial) {
      const long b = static_cast<long>(rng() % 41) - 20;
      const long c = static_cast<long>(rng() % 41) - 20;
      const TrinomialParams params(b, c);
      for (int e = 1; e <= 3; ++e) {
        const Modulus mod = make_modulus(p, e);
        const std::uint64_t len = std::min<std::uint64_t>(static_cast<std::uint64_t>(p), 200);
        const auto s = trinomial_mod_series(params, mod, len);
        ASSERT_EQ(s.terms.size(), len);
        for (std::uint64_t k = 0; k < len; ++k) {
          const auto want = *oracle::reduce(mpq_class(oracle::trinomial_multinomial(k, b, c)), mod.pe());
          ASSERT_EQ(s.terms[k].value(), want) << "p=" << p << " e=" << e << " b=" << b << " c=" << c
                                              << " k=" << k;
        }
      }
    }
  }
}

TEST(Trinomial, ModSeriesRejectsLongLength) {
  EXPECT_THROW(trinomial_mod_series(TrinomialParams(1, 1), make_modulus(7, 1), 8), Error);
}

void expect_represents(const ValuedResidue& v, const mpz_class& x) {
  const std::uint64_t p = v.modulus().p();
  const mpz_class mod = oracle::power(mpz_class(static_cast<unsigned long>(p)), v.precision());
  if (v.is_zero()) {
    EXPECT_EQ(mpz_class(x % mod), 0);
    return;
  }
  EXPECT_EQ(v.val(), valuation(x, p));
  const mpz_class repr =
      oracle::power(mpz_class(static_cast<unsigned long>(p)), v.val()) * mpz_class(static_cast<unsigned long>(v.unit().value()));
  EXPECT_EQ(mpz_class((repr - x) % mod), 0) << x.get_str();
}

TEST(CentralBinomial, ValuedSeriesMatchesExact) {
  for (std::int64_t p : {3, 5, 7, 13, 101}) {
    for (int e = 1; e <= 3; ++e) {
      const Modulus mod = make_modulus(p, e);
      const auto s = central_binomial_series(mod, static_cast<std::uint64_t>(p));
      for (std::uint64_t k = 0; k < static_cast<std::uint64_t>(p); ++k) {
        const auto& v = s.terms[k];
        EXPECT_GE(v.precision(), v.val() + e);
        expect_represents(v, oracle::central_binomial(static_cast<unsigned>(k)));
        EXPECT_EQ(v.val(), 2 * k >= static_cast<std::uint64_t>(p) ? 1 : 0);
      }
    }
  }
}

TEST(CentralBinomial, BinomValuedMatchesExact) {
  std::mt19937_64 rng(3);
  for (std::int64_t p : {3, 5, 7, 31}) {
    for (int e = 1; e <= 3; ++e) {
      const Modulus mod = make_modulus(p, e);
      for (int i = 0; i < 200; ++i) {
        const auto n = static_cast<long>(rng() % static_cast<std::uint64_t>(p * p));
        const auto k = static_cast<long>(rng() % static_cast<std::uint64_t>(n + 1));
        mpz_class want;
        mpz_bin_uiui(want.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
        const auto v = binom_valued(n, k, mod);
        expect_represents(v, want);
      }
    }
  }
  EXPECT_TRUE(binom_valued(3, 5, make_modulus(7, 1)).is_zero());
}

TEST(Harmonic, ExactValues) {
  EXPECT_EQ(harmonic_exact(0), 0);
  EXPECT_EQ(harmonic_exact(1), 1);
  EXPECT_EQ(harmonic_exact(4), mpq_class(25, 12));
}

TEST(Harmonic, ModMatchesExact) {
  for (std::int64_t p : {5, 7, 11, 101}) {
    for (int e = 1; e <= 3; ++e) {
      const Modulus mod = make_modulus(p, e);
      for (std::uint64_t n = 0; n < static_cast<std::uint64_t>(p); ++n) {
        EXPECT_EQ(harmonic_mod(n, mod).value(),
                  *oracle::reduce(harmonic_exact(static_cast<unsigned>(n)), mod.pe()));
      }
    }
  }
}

mpz_class v_exact(long t, unsigned n) {
  mpz_class a = 2, b = t;
  if (n == 0) return a;
  for (unsigned i = 1; i < n; ++i) {
    mpz_class next = t * (b + a);
    a = b;
    b = next;
  }
  return b;
}

TEST(VPoly, MatchesExactAndFermat) {
  for (std::int64_t p : {3, 5, 7, 11, 13, 97}) {
    const Modulus mod = make_modulus(p, 2);
    for (long t = -6; t <= 6; ++t) {
      const Residue tr = Residue::from_int(mod, t);
      for (unsigned n = 0; n < 20; ++n) {
        EXPECT_EQ(v_poly(tr, n).value(), *oracle::reduce(mpq_class(v_exact(t, n)), mod.pe()));
      }
      const Modulus mod1 = make_modulus(p, 1);
      EXPECT_EQ(v_poly(Residue::from_int(mod1, t), static_cast<std::uint64_t>(p)),
                Residue::from_int(mod1, t));
    }
  }
}

TEST(SSum, MatchesExact) {
  const mpq_class xs[] = {mpq_class(1), mpq_class(1, 4), mpq_class(-1, 2), mpq_class(3, 7), mpq_class(2)};
  for (std::int64_t p : {5, 11, 13, 29, 53}) {
    for (const auto& x : xs) {
      if (x.get_den() % p == 0) continue;
      mpq_class sum = 0;
      for (unsigned k = 1; k < static_cast<unsigned>(p); ++k) {
        mpq_class term(oracle::central_binomial(k), k);
        mpz_class num, den;
        mpz_pow_ui(num.get_mpz_t(), x.get_num_mpz_t(), k);
        mpz_pow_ui(den.get_mpz_t(), x.get_den_mpz_t(), k);
        term *= mpq_class(num, den);
        term.canonicalize();
        sum += term;
      }
      EXPECT_EQ(s_sum(x, static_cast<std::uint64_t>(p)).value(),
                *oracle::reduce(sum, static_cast<std::uint64_t>(p)))
          << "p=" << p << " x=" << x.get_str();
    }
  }
}

TEST(SSum, KnownValues) {
  for (std::uint64_t p : oracle::primes_upto(200, 5)) {
    EXPECT_EQ(s_sum(mpq_class(1), p).value(), 0u) << p;
    EXPECT_EQ(s_sum(mpq_class(1, 3), p), fermat_quotient(3, p)) << p;
  }
}

TEST(Polylog, MatchesExact) {
  for (std::int64_t p : {5, 7, 23}) {
    for (unsigned order = 1; order <= 3; ++order) {
      for (const mpq_class x : {mpq_class(2), mpq_class(-1, 3), mpq_class(5, 2)}) {
        mpq_class sum = 0;
        mpq_class xk = 1;
        for (unsigned k = 1; k < static_cast<unsigned>(p); ++k) {
          xk *= x;
          sum += xk / mpq_class(oracle::power(mpz_class(k), order));
        }
        EXPECT_EQ(polylog_finite(order, x, static_cast<std::uint64_t>(p)).value(),
                  *oracle::reduce(sum, static_cast<std::uint64_t>(p)));
      }
    }
  }
}

TEST(SunTauraso, RhsMatchesExact) {
  EXPECT_EQ(sun_tauraso_rhs(1, 3).value(), 1u);
  for (std::uint64_t p : oracle::primes_upto(60)) {
    for (long t = -5; t <= 5; ++t) {
      if (t == 0 || t % static_cast<long>(p) == 0) continue;
      const mpz_class numer =
          2 * oracle::power(mpz_class(t), static_cast<unsigned>(p)) - 2 * v_exact(t, static_cast<unsigned>(p));
      mpq_class q(numer, mpz_class(static_cast<unsigned long>(p)) * t);
      q.canonicalize();
      EXPECT_EQ(sun_tauraso_rhs(t, p).value(), *oracle::reduce(q, p)) << "p=" << p << " t=" << t;
    }
  }
}

}  // namespace
}  // namespace gctc
