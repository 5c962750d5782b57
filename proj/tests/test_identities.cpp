#include "gctc/identities.hpp"

#include <gtest/gtest.h>

#include "gctc/sweep.hpp"
#include "oracles.hpp"

namespace gctc {
namespace {

std::vector<BigRat> samples(std::size_t count) { return extend_samples(default_x_samples(), count); }

TEST(QuadExtRat, Arithmetic) {
  const QuadExtRat a(BigRat(1), BigRat(2), 3);  // 1 + 2 sqrt3
  const QuadExtRat b(BigRat(1, 2), BigRat(-1), 3);
  const auto prod = a * b;
  EXPECT_EQ(prod.rational_part(), BigRat(1, 2) - 6);
  EXPECT_EQ(prod.radical_part(), BigRat(-1) + 1);
  EXPECT_EQ(a * a.conjugate(), QuadExtRat(BigRat(-11), BigRat(0), 3));
  EXPECT_EQ(a + b - b, a);
  EXPECT_THROW((void)(a + QuadExtRat(BigRat(1), BigRat(1), 5)), Error);
}

TEST(Clausen, HoldsOnGridAndMatchesOracle) {
  for (long b = -4; b <= 4; ++b) {
    for (long c = -4; c <= 4; ++c) {
      const TrinomialParams params(b, c);
      const long d = b * b - 4 * c;
      for (unsigned n = 0; n <= 20; ++n) {
        ASSERT_TRUE(verify_clausen_square(n, params).holds) << b << "," << c << " n=" << n;
        mpz_class rhs = 0;
        for (unsigned k = 0; k <= n; ++k) {
          mpz_class bn;
          mpz_bin_uiui(bn.get_mpz_t(), n + k, 2 * k);
          const mpz_class cb = oracle::central_binomial(k);
          rhs += bn * cb * cb * oracle::power(c, k) * oracle::power(d, n - k);
        }
        const mpz_class t = oracle::trinomial_multinomial(n, b, c);
        ASSERT_EQ(t * t, rhs);
      }
    }
  }
}

TEST(Harmonic, IdentityAndRecurrence) {
  for (const auto& x : samples(30)) {
    for (unsigned n = 0; n <= 25; ++n) {
      EXPECT_TRUE(verify_harmonic_identity(n, x).holds) << "n=" << n << " x=" << x.get_str();
      EXPECT_TRUE(verify_harmonic_recurrence(n, x).holds) << "n=" << n << " x=" << x.get_str();
    }
  }
}

TEST(InverseBinomial, KnownClosedForm) {
  for (const auto& x : samples(55)) {
    for (unsigned n = 0; n <= 25; ++n) {
      EXPECT_TRUE(verify_known_inverse_binom(n, x).holds) << "n=" << n << " x=" << x.get_str();
    }
  }
  EXPECT_THROW(verify_known_inverse_binom(3, BigRat(-1)), Error);
}

TEST(InverseBinomial, OddTopClosedFormsAndRecurrence) {
  for (const auto& x : samples(105)) {
    for (unsigned n = 1; n <= 25; ++n) {
      EXPECT_TRUE(verify_lemma3(n, x).holds) << "n=" << n << " x=" << x.get_str();
      EXPECT_TRUE(verify_lemma3_recurrence(n, x).holds) << "n=" << n << " x=" << x.get_str();
    }
  }
  EXPECT_THROW(verify_lemma3(0, BigRat(2)), Error);
}

TEST(DoubleSum, LogDifference) {
  const std::pair<long, long> md[] = {{1, 1}, {2, -3}, {-5, 2}, {36, 12}, {4, 12}, {7, 9}, {-1, 3}};
  for (const auto& [m, d] : md) {
    for (unsigned n = 0; n <= 20; ++n) {
      EXPECT_TRUE(verify_lemma4(n, m, d).holds) << m << "," << d << " n=" << n;
      EXPECT_TRUE(verify_lemma4_recurrence(n, m, d).holds) << m << "," << d << " n=" << n;
    }
  }
  EXPECT_THROW(verify_lemma4(3, 2, -2), Error);
  EXPECT_THROW(verify_lemma4(3, 0, 5), Error);
}

TEST(Legendre, ConnectionInQuadraticField) {
  for (long b = -4; b <= 4; ++b) {
    for (long c = -4; c <= 4; ++c) {
      const TrinomialParams params(b, c);
      if (params.d() == 0) {
        EXPECT_THROW(verify_legendre_connection(2, params), Error);
        continue;
      }
      for (unsigned n = 0; n <= 20; ++n) {
        EXPECT_TRUE(verify_legendre_connection(n, params).holds) << b << "," << c << " n=" << n;
      }
    }
  }
}

TEST(ModularLemmas, PolylogAndHalfSum) {
  for (std::uint64_t p : oracle::primes_upto(200, 5)) {
    for (const BigRat x : {BigRat(2), BigRat(-1), BigRat(1, 3), BigRat(-5, 7), BigRat(9, 4)}) {
      const BigInt sp(static_cast<unsigned long>(p));
      const BigRat one_minus = 1 - x;
      const bool bad = x.get_den() % sp == 0 || x.get_num() % sp == 0 ||
                       one_minus.get_num() % sp == 0;
      if (bad) {
        EXPECT_THROW(verify_lemma5(p, x), Error);
      } else {
        EXPECT_TRUE(verify_lemma5(p, x).holds) << p << " " << x.get_str();
      }
      if (x.get_den() % sp != 0) {
        EXPECT_TRUE(verify_lemma6(p, x).holds) << p << " " << x.get_str();
      }
    }
  }
}

TEST(ModularLemmas, TransitionBinomials) {
  for (std::uint64_t p : oracle::primes_upto(60)) {
    const std::uint64_t half = (p - 1) / 2;
    for (std::uint64_t l = 1; l <= half; ++l) {
      for (std::uint64_t k = 0; k + 2 * l + 1 <= p || k + 1 <= l; ++k) {
        EXPECT_TRUE(verify_transition_binomials(p, l, k).holds) << p << " l=" << l << " k=" << k;
      }
    }
  }
  EXPECT_THROW(verify_transition_binomials(7, 0, 0), Error);
  EXPECT_THROW(verify_transition_binomials(7, 3, 5), Error);
}

TEST(ModularLemmas, HalfBinomialProduct) {
  for (std::uint64_t p : oracle::primes_upto(300)) {
    for (std::uint64_t l = 0; l <= (p - 1) / 2; ++l) {
      EXPECT_TRUE(verify_sun_lemma31(p, l).holds) << p << " l=" << l;
    }
  }
  EXPECT_THROW(verify_sun_lemma31(7, 4), Error);
}

TEST(ModularLemmas, Wolstenholme) {
  for (std::uint64_t p : oracle::primes_upto(400, 5)) EXPECT_TRUE(verify_wolstenholme(p).holds) << p;
  EXPECT_THROW(verify_wolstenholme(3), Error);
}

TEST(IdentitySweep, AllSuitesPass) {
  IdentitySweepConfig config;
  config.n_max = 10;
  config.p_max = 60;
  config.grid = {-2, 2, -2, 2};
  const auto result = run_identity_sweep(config);
  EXPECT_GT(result.pass, 0u);
  EXPECT_EQ(result.fail, 0u);
  for (const auto& r : result.reports) EXPECT_TRUE(r.holds) << r.id << " " << r.params;
}

TEST(IdentitySweep, SampleExtension) {
  const auto xs = extend_samples({BigRat(1, 2)}, 12);
  ASSERT_EQ(xs.size(), 12u);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    EXPECT_NE(xs[i], -1);
    for (std::size_t j = 0; j < i; ++j) EXPECT_NE(xs[i], xs[j]);
  }
}

}  // namespace
}  // namespace gctc
