#include <gtest/gtest.h>

#include <thread>

#include "supercong/primes.hpp"
#include "supercong/special_values.hpp"
#include "supercong/sums.hpp"

using namespace supercong;

TEST(Bernoulli, FirstValues) {
  const std::vector<ExactRational> expected = {
      ExactRational(1),     ExactRational(-1, 2), ExactRational(1, 6),  ExactRational(0),
      ExactRational(-1, 30), ExactRational(0),    ExactRational(1, 42), ExactRational(0),
      ExactRational(-1, 30), ExactRational(0),    ExactRational(5, 66), ExactRational(0),
      ExactRational(-691, 2730)};
  for (unsigned n = 0; n < expected.size(); ++n) EXPECT_EQ(bernoulli_number(n), expected[n]) << n;
}

TEST(Bernoulli, PolynomialValues) {
  EXPECT_EQ(bernoulli_polynomial(2, ExactRational(0)), ExactRational(1, 6));
  EXPECT_EQ(bernoulli_polynomial(1, ExactRational(1, 2)), ExactRational(0));
  EXPECT_EQ(bernoulli_polynomial(2, ExactRational(1, 2)), ExactRational(-1, 12));
  EXPECT_EQ(bernoulli_polynomial(4, ExactRational(1, 2)), ExactRational(7, 240));
}

TEST(Bernoulli, ClausenVonStaudt) {
  for (unsigned n = 2; n <= 80; n += 2) {
    ExactRational s = bernoulli_number(n);
    for (Prime p : primes_in_range({2, n + 1}))
      if (n % (p - 1) == 0) s += ExactRational(1, static_cast<long>(p));
    EXPECT_TRUE(s.is_integer()) << n;
  }
}

TEST(Bernoulli, KummerCongruence) {
  // B_h / h == B_k / k (mod p) for h == k (mod p-1), h, k even and not divisible by p-1.
  for (Prime p : {5u, 7u, 11u, 13u}) {
    for (unsigned h = 2; h < p - 1; h += 2) {
      const unsigned k = h + (p - 1);
      const ExactRational a = bernoulli_number(h) / ExactRational(h);
      const ExactRational b = bernoulli_number(k) / ExactRational(k);
      EXPECT_TRUE(congruent_mod(a, b, p, 1)) << p << " " << h;
    }
  }
}

TEST(Bernoulli, PolynomialSymmetryAndTranslation) {
  for (unsigned n = 0; n <= 60; ++n) {
    for (const ExactRational& x : {ExactRational(1, 3), ExactRational(2, 7), ExactRational(-5, 4)}) {
      const ExactRational lhs = bernoulli_polynomial(n, ExactRational(1) - x);
      const ExactRational rhs = bernoulli_polynomial(n, x);
      EXPECT_EQ(lhs, n % 2 ? -rhs : rhs) << n;
      if (n >= 1)
        EXPECT_EQ(bernoulli_polynomial(n, x + ExactRational(1)) - rhs,
                  ExactRational(static_cast<long>(n)) * x.pow(static_cast<long>(n) - 1));
    }
  }
}

TEST(Bernoulli, DenominatorOfShiftedPolynomial) {
  // m^n (B_n(r/m) - B_n) is an integer.
  for (unsigned n = 1; n <= 30; ++n)
    for (long m = 2; m <= 8; ++m)
      for (long r = 1; r < m; ++r) {
        const ExactRational v = ExactRational(m).pow(n) * (bernoulli_polynomial(n, ExactRational(r, m)) - bernoulli_number(n));
        EXPECT_TRUE(v.is_integer()) << n << " " << r << "/" << m;
      }
}

TEST(Bernoulli, CacheIsMonotoneAndThreadSafe) {
  BernoulliCache cache;
  std::vector<std::jthread> threads;
  std::vector<ExactRational> seen(8);
  for (unsigned t = 0; t < 8; ++t)
    threads.emplace_back([&cache, &seen, t] { seen[t] = cache.number(40 + 10 * t); });
  threads.clear();
  EXPECT_GE(cache.high_water_mark(), 110u);
  for (unsigned t = 0; t < 8; ++t) EXPECT_EQ(seen[t], bernoulli_number(40 + 10 * t));
}

TEST(Binomial, Values) {
  EXPECT_EQ(binomial(10, 5), 252);
  EXPECT_EQ(binomial(10, -1), 0);
  EXPECT_EQ(binomial(10, 11), 0);
  EXPECT_EQ(binomial(0, 0), 1);
}

TEST(Binomial, Wolstenholme) {
  for (Prime p : primes_in_range({5, 60}))
    EXPECT_TRUE(congruent_mod(ExactRational(binomial(2 * p - 1, static_cast<long>(p) - 1)), ExactRational(1), p, 3)) << p;
}

TEST(FermatQuotient, Values) {
  EXPECT_EQ(fermat_quotient_exact(ExactRational(1, 16), 5), ExactRational(-13107, 65536));
  EXPECT_EQ(fermat_quotient(ExactRational(1, 16), 5, 1).value(), 3);
  EXPECT_EQ(fermat_quotient(ExactRational(1, 16), 5, 2).value(), 13);
  EXPECT_THROW(fermat_quotient(ExactRational(10), 5, 1), NotPIntegral);
}

TEST(FermatQuotient, LogarithmicProperty) {
  // q(ab) == q(a) + q(b) (mod p).
  for (Prime p : primes_in_range({5, 40}))
    for (long a = 2; a <= 9; ++a)
      for (long b = 2; b <= 9; ++b) {
        if (a % static_cast<long>(p) == 0 || b % static_cast<long>(p) == 0) continue;
        EXPECT_EQ(fermat_quotient(ExactRational(a * b), p, 1),
                  fermat_quotient(ExactRational(a), p, 1) + fermat_quotient(ExactRational(b), p, 1));
      }
}
