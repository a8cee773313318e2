#include <gtest/gtest.h>

#include <random>

#include "supercong/exact_arith.hpp"

using namespace supercong;

TEST(ExactRational, StaysReduced) {
  const ExactRational q(BigInt(6), BigInt(-4));
  EXPECT_EQ(q.numerator(), -3);
  EXPECT_EQ(q.denominator(), 2);
  EXPECT_EQ(ExactRational(0, 7).to_string(), "0/1");
  EXPECT_EQ((ExactRational(1, 6) + ExactRational(1, 3)).to_string(), "1/2");
  EXPECT_THROW(ExactRational(1, 0), std::domain_error);
  EXPECT_THROW(ExactRational(1) / ExactRational(0), std::domain_error);
}

TEST(ExactRational, ParseAndPow) {
  EXPECT_EQ(ExactRational::parse("-10/4"), ExactRational(-5, 2));
  EXPECT_EQ(ExactRational::parse("7"), ExactRational(7));
  EXPECT_THROW(ExactRational::parse("abc"), std::invalid_argument);
  EXPECT_EQ(ExactRational(2, 3).pow(3), ExactRational(8, 27));
  EXPECT_EQ(ExactRational(2, 3).pow(-2), ExactRational(9, 4));
  EXPECT_EQ(ExactRational(-2, 3).pow(0), ExactRational(1));
}

TEST(PValuation, Examples) {
  EXPECT_EQ(p_valuation(ExactRational(945, 32), 2).value(), -5);
  EXPECT_EQ(p_valuation(ExactRational(1), 7).value(), 0);
  EXPECT_EQ(p_valuation(ExactRational(25, 3), 5).value(), 2);
}

TEST(PValuation, ZeroIsInfinite) {
  const Valuation v = p_valuation(ExactRational(0), 5);
  EXPECT_TRUE(v.is_infinite());
  EXPECT_TRUE(v.at_least(1000));
  EXPECT_EQ(v.to_string(), "inf");
  EXPECT_THROW((void)v.value(), std::logic_error);
  EXPECT_THROW(p_adic_split(ExactRational(0), 5), std::domain_error);
}

TEST(PAdicSplit, Reconstructs) {
  const ExactRational q(BigInt(5 * 5 * 7), BigInt(3 * 125));
  const PAdicSplit s = p_adic_split(q, 5);
  EXPECT_EQ(s.valuation, -1);
  EXPECT_EQ(s.unit, ExactRational(7, 3));
  EXPECT_EQ(ExactRational(5).pow(s.valuation) * s.unit, q);
}

TEST(ReduceMod, Examples) {
  EXPECT_EQ(reduce_mod(ExactRational(2483, 16384), 5, 2).value(), 12);
  EXPECT_EQ(reduce_mod(ExactRational(1), 7, 3).value(), 1);
  EXPECT_THROW(reduce_mod(ExactRational(1, 5), 5, 2), NotPIntegral);
  EXPECT_EQ(reduce_mod(ExactRational(-1), 5, 2).value(), 24);
}

TEST(ModInverse, Examples) {
  EXPECT_EQ(mod_inverse(9, 25), 14);
  EXPECT_EQ(mod_inverse(1, 1000), 1);
  EXPECT_THROW(mod_inverse(5, 25), NotInvertible);
  EXPECT_EQ(mod_inverse(-1, 7), 6);
}

TEST(CanonicalRepresentative, Examples) {
  EXPECT_EQ(canonical_representative(ExactRational(1, 5), 2), 1);
  EXPECT_EQ(canonical_representative(ExactRational(1, 5), 3), 2);
  EXPECT_EQ(canonical_representative(ExactRational(-1, 5), 3), 1);
  EXPECT_THROW(canonical_representative(ExactRational(1, 6), 3), NotInvertible);
}

TEST(CongruentMod, Examples) {
  EXPECT_TRUE(congruent_mod(ExactRational(1, 4), ExactRational(94), 5, 3));
  EXPECT_FALSE(congruent_mod(ExactRational(1, 4), ExactRational(94), 5, 4));
  EXPECT_TRUE(congruent_mod(ExactRational(3, 7), ExactRational(3, 7), 11, 50));
  EXPECT_FALSE(congruent_mod(ExactRational(1), ExactRational(2), 5, 1));
  // Sides that are not p-integral can still be congruent.
  EXPECT_TRUE(congruent_mod(ExactRational(1, 5), ExactRational(1, 5) + ExactRational(25), 5, 2));
}

TEST(Residue, ArithmeticAndMismatch) {
  const Residue a(7, 5, 2), b(20, 5, 2);
  EXPECT_EQ((a + b).value(), 2);
  EXPECT_EQ((a - b).value(), 12);
  EXPECT_EQ((a * b).value(), 15);
  EXPECT_EQ(a.modulus(), 25);
  EXPECT_THROW(a + Residue(1, 5, 3), ModulusMismatch);
  EXPECT_THROW(a * Residue(1, 7, 2), ModulusMismatch);
  EXPECT_EQ(a.truncate(1).value(), 2);
}

// --- properties ---------------------------------------------------------------

namespace {

ExactRational random_rational(std::mt19937_64& rng, bool nonzero = false) {
  std::uniform_int_distribution<long> num(-5000, 5000), den(1, 5000);
  for (;;) {
    ExactRational q(num(rng), den(rng));
    // Sprinkle prime powers so valuations vary.
    std::uniform_int_distribution<int> e(-3, 3);
    q *= ExactRational(5).pow(e(rng));
    if (!nonzero || !q.is_zero()) return q;
  }
}

}  // namespace

TEST(ExactArithProperties, ValuationIsAdditive) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 500; ++i) {
    const ExactRational a = random_rational(rng, true), b = random_rational(rng, true);
    for (Prime p : {3u, 5u, 7u})
      EXPECT_EQ(p_valuation(a * b, p).value(), p_valuation(a, p).value() + p_valuation(b, p).value());
  }
}

TEST(ExactArithProperties, TowerCompatibility) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 500; ++i) {
    const ExactRational q = random_rational(rng);
    if (!p_valuation(q, 5).at_least(0)) continue;
    for (unsigned k = 2; k <= 6; ++k) EXPECT_EQ(reduce_mod(q, 5, k).truncate(k - 1), reduce_mod(q, 5, k - 1));
  }
}

TEST(ExactArithProperties, ReductionIsARingHomomorphism) {
  std::mt19937_64 rng(3);
  int tested = 0;
  for (int i = 0; i < 1000; ++i) {
    const ExactRational a = random_rational(rng), b = random_rational(rng);
    if (!p_valuation(a, 5).at_least(0) || !p_valuation(b, 5).at_least(0)) continue;
    ++tested;
    const Residue ra = reduce_mod(a, 5, 4), rb = reduce_mod(b, 5, 4);
    EXPECT_EQ(ra + rb, reduce_mod(a + b, 5, 4));
    EXPECT_EQ(ra - rb, reduce_mod(a - b, 5, 4));
    EXPECT_EQ(ra * rb, reduce_mod(a * b, 5, 4));
  }
  EXPECT_GT(tested, 100);
}

TEST(ExactArithProperties, CongruenceIsAnEquivalence) {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<long> small(0, 4);
  for (int i = 0; i < 300; ++i) {
    // b and c are close to a 5-adically so the relation is exercised in both directions.
    const ExactRational a = random_rational(rng);
    const ExactRational b = a + ExactRational(small(rng)) * ExactRational(125);
    const ExactRational c = b + ExactRational(small(rng)) * ExactRational(25);
    const bool ab = congruent_mod(a, b, 5, 2), bc = congruent_mod(b, c, 5, 2);
    EXPECT_TRUE(congruent_mod(a, a, 5, 2));
    EXPECT_EQ(ab, congruent_mod(b, a, 5, 2));
    if (ab && bc) EXPECT_TRUE(congruent_mod(a, c, 5, 2));
  }
}
