#include <gtest/gtest.h>

#include <random>

#include "supercong/numeric.hpp"

using namespace supercong;

TEST(PAdicApprox, ResidueOfRational) {
  const PAdicField f(5, 6);
  EXPECT_EQ(f(ExactRational(2483, 16384)).residue(2).value(), 12);
  EXPECT_THROW(f(ExactRational(1, 5)).residue(1), NotPIntegral);
  EXPECT_EQ(f(0).residue(3).value(), 0);
}

TEST(PAdicApprox, CancellationLosesPrecision) {
  const PAdicField f(5, 3);
  // 1 and 1 + 5^5 agree to every known digit: the difference is only known to be 0 mod 5^3.
  const PAdicApprox d = f(1) - f(ExactRational(1 + 3125));
  EXPECT_TRUE(d.is_zero());
  EXPECT_EQ(d.absolute_precision(), 3);
  EXPECT_TRUE(d.valuation_at_least(3));
  EXPECT_THROW((void)d.valuation_at_least(4), PrecisionLoss);
  EXPECT_THROW((void)(f(1) / d), PrecisionLoss);
}

TEST(PAdicApprox, DivisionByPShiftsPrecision) {
  const PAdicField f(7, 4);
  // 50 - 1 = 7^2 is known mod 7^4, so (50 - 1)/7 is known mod 7^3.
  const PAdicApprox x = (f(ExactRational(50)) - f(1)) / f(7);
  EXPECT_EQ(x.valuation(), 1);
  EXPECT_EQ(x.absolute_precision(), 3);
  EXPECT_EQ(x.residue(2).value(), 7);
}

TEST(PAdicApprox, AgreesWithExactArithmetic) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(-400, 400), den(1, 400);
  for (Prime p : {5u, 7u, 13u}) {
    const PAdicField f(p, 8);
    for (int i = 0; i < 300; ++i) {
      const ExactRational a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
      if (b.is_zero() || c.is_zero()) continue;
      const ExactRational exact = (a * b - c) / (b + c == ExactRational(0) ? ExactRational(1) : b + c) + a / c;
      const PAdicApprox approx =
          (f(a) * f(b) - f(c)) / (b + c == ExactRational(0) ? f(1) : f(b) + f(c)) + f(a) / f(c);
      // Whatever digits the approximation certifies must match the exact value.
      const long digits = approx.absolute_precision();
      for (unsigned k = 1; k <= 4 && static_cast<long>(k) <= digits; ++k) {
        if (p_valuation(exact, p).at_least(0))
          EXPECT_EQ(approx.residue(k), reduce_mod(exact, p, k));
        EXPECT_EQ(approx.valuation_at_least(k), p_valuation(exact, p).at_least(k));
      }
    }
  }
}

TEST(PAdicApprox, PowMatchesExact) {
  const PAdicField f(11, 6);
  const ExactRational x(3, 22);
  EXPECT_EQ(f(x).pow(-3).valuation(), 3);
  EXPECT_EQ(f(x).pow(5).pow(2).valuation(), -10);
  EXPECT_EQ((f(x).pow(4) * f(ExactRational(11).pow(4))).residue(3), reduce_mod(x.pow(4) * ExactRational(11).pow(4), 11, 3));
}
