#include "gctc/valued.hpp"

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

namespace gctc {
namespace {

const Modulus kMod25 = make_modulus(5, 2);

ValuedResidue vr(int val, std::uint64_t unit, const Modulus& mod = kMod25) {
  return ValuedResidue::from_parts(mod, val, unit);
}

TEST(ValuedResidue, MulDivExamples) {
  const auto prod = vr(1, 2) * vr(0, 3);
  EXPECT_EQ(prod.val(), 1);
  EXPECT_EQ(prod.unit().value(), 6u);
  const auto quot = vr(1, 6) / vr(1, 2);
  EXPECT_EQ(quot.val(), 0);
  EXPECT_EQ(quot.unit().value(), 3u);
  try {
    (void)(vr(0, 1) / vr(1, 1));
    FAIL() << "expected NegativeValuation";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kNegativeValuation);
  }
  EXPECT_THROW((void)(vr(0, 1) / ValuedResidue::exact_zero(kMod25)), Error);
}

TEST(ValuedResidue, AddExamples) {
  const auto cancel = vr(0, 1) + vr(0, 24);
  EXPECT_TRUE(cancel.is_zero());
  EXPECT_EQ(cancel.to_residue(2).value(), 0u);

  const auto mixed = vr(1, 1) + vr(0, 1);
  EXPECT_EQ(mixed.val(), 0);
  EXPECT_EQ(mixed.unit().value(), 6u);

  const auto with_zero = vr(2, 1) + ValuedResidue::exact_zero(kMod25);
  EXPECT_EQ(with_zero.val(), 2);
  EXPECT_EQ(with_zero.unit().value(), 1u);
}

TEST(ValuedResidue, ToResidueExamples) {
  EXPECT_EQ(vr(1, 3).to_residue(2).value(), 15u);
  EXPECT_EQ(vr(2, 1).to_residue(2).value(), 0u);
  EXPECT_EQ(ValuedResidue::exact_zero(kMod25).to_residue(2).value(), 0u);
  EXPECT_EQ(ValuedResidue::exact_zero(kMod25).to_residue(1).value(), 0u);
}

TEST(ValuedResidue, PrecisionLossIsReported) {
  // 1 + 24 = 25 is only known mod 25 once the unit digits cancel.
  const auto partial = vr(0, 1) + vr(0, 24);
  EXPECT_EQ(partial.precision(), 2);
  // p * (that) is known mod p^3 only in a cubic context; here e = 2 caps it.
  const Modulus mod125 = make_modulus(5, 3);
  const auto a = ValuedResidue::from_int(mod125, 1);
  const auto b = ValuedResidue::from_int(mod125, 124);  // -1 mod 125, known mod 125 only
  const auto s = a + b;
  EXPECT_TRUE(s.is_zero());
  EXPECT_EQ(s.precision(), 3);
  // 6 + 19 = 25: valuation 2, leaving one known digit of the unit.
  const auto c = ValuedResidue::from_int(mod125, 6) + ValuedResidue::from_int(mod125, 19);
  EXPECT_EQ(c.val(), 2);
  EXPECT_EQ(c.precision(), 3);
  EXPECT_EQ(c.to_residue(3).value(), 25u);
  // Dividing by p loses one absolute digit: 25/5 is known mod 25, not 125.
  const auto d = c / ValuedResidue::from_int(mod125, 5);
  EXPECT_EQ(d.precision(), 2);
  EXPECT_EQ(d.to_residue(2).value(), 5u);
  try {
    (void)d.to_residue(3);
    FAIL() << "expected PrecisionLoss";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kPrecisionLoss);
  }
}

mpz_class p_pow(std::uint64_t p, int n) { return oracle::power(mpz_class(static_cast<unsigned long>(p)), n); }

// Checks that v represents the integer x to v's stated precision.
void expect_represents(const ValuedResidue& v, const mpz_class& x) {
  const std::uint64_t p = v.modulus().p();
  const int prec = v.precision();
  ASSERT_LT(prec, 64);
  const mpz_class mod = p_pow(p, prec);
  if (v.is_zero()) {
    EXPECT_EQ(mpz_class(x % mod), 0);
    return;
  }
  const mpz_class repr = p_pow(p, v.val()) * mpz_class(static_cast<unsigned long>(v.unit().value()));
  mpz_class diff = (repr - x) % mod;
  EXPECT_EQ(diff, 0) << "x=" << x.get_str() << " val=" << v.val() << " unit=" << v.unit().value();
  EXPECT_NE(v.unit().value() % p, 0u);
}

TEST(ValuedResidue, RoundTripProperty) {
  std::mt19937_64 rng(11);
  for (std::uint64_t p : {3ull, 5ull, 7ull, 101ull, 997ull}) {
    for (int e = 1; e <= 3; ++e) {
      const Modulus mod = make_modulus(static_cast<std::int64_t>(p), e);
      const std::uint64_t p4 = p * p * p * p;
      for (int i = 0; i < 300; ++i) {
        std::uint64_t n = 1 + rng() % (p4 - 1);
        if (i % 3 == 0) n = (n / p) * p + p;
        const auto v = ValuedResidue::from_int(mod, static_cast<std::int64_t>(n));
        EXPECT_EQ(v.val(), valuation(n, p));
        EXPECT_EQ(v.precision(), v.val() + e);
        expect_represents(v, mpz_class(static_cast<unsigned long>(n)));
      }
    }
  }
}

TEST(ValuedResidue, AgreesWithBigIntArithmetic) {
  std::mt19937_64 rng(12345);
  for (std::uint64_t p : {3ull, 5ull, 7ull, 13ull, 101ull}) {
    for (int e = 1; e <= 3; ++e) {
      const Modulus mod = make_modulus(static_cast<std::int64_t>(p), e);
      const auto sp = static_cast<std::int64_t>(p);
      auto draw = [&]() -> std::int64_t {
        std::int64_t x = static_cast<std::int64_t>(rng() % 200000) - 100000;
        const int shift = static_cast<int>(rng() % 4);
        for (int i = 0; i < shift; ++i) x *= sp;
        return x == 0 ? 1 : x;
      };
      for (int i = 0; i < 1000; ++i) {
        const std::int64_t a = draw();
        std::int64_t b = draw();
        if (i % 10 == 0) b = -a + sp * static_cast<std::int64_t>(rng() % 7);  // force cancellation
        if (b == 0) b = 1;
        const auto va = ValuedResidue::from_int(mod, a);
        const auto vb = ValuedResidue::from_int(mod, b);
        const mpz_class ba(static_cast<long>(a)), bb(static_cast<long>(b));
        expect_represents(va + vb, ba + bb);
        expect_represents(va - vb, ba - bb);
        expect_represents(va * vb, ba * bb);
        EXPECT_EQ((va + vb).precision(), std::min(va.val(), vb.val()) + e);
      }
    }
  }
}

}  // namespace
}  // namespace gctc
