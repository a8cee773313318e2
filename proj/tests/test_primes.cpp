#include <gtest/gtest.h>

#include "supercong/primes.hpp"

using namespace supercong;

TEST(Primes, Examples) {
  EXPECT_EQ(primes_in_range({5, 20}), (std::vector<Prime>{5, 7, 11, 13, 17, 19}));
  EXPECT_TRUE(primes_in_range({14, 16}).empty());
  EXPECT_EQ(primes_in_range({5, 5}), (std::vector<Prime>{5}));
  EXPECT_TRUE(primes_in_range({20, 10}).empty());
  EXPECT_EQ(primes_in_range({0, 10}), (std::vector<Prime>{2, 3, 5, 7}));
}

TEST(Primes, CountsAndTrialDivision) {
  EXPECT_EQ(primes_in_range({2, 1000}).size(), 168u);
  for (Prime p : primes_in_range({900, 2000})) EXPECT_TRUE(is_prime(p));
}

TEST(Primes, SegmentedSieveMatchesTrialDivision) {
  const std::vector<Prime> ps = primes_in_range({kSegmentThreshold - 200, kSegmentThreshold + 3000});
  std::vector<Prime> expected;
  for (std::uint64_t n = kSegmentThreshold - 200; n <= kSegmentThreshold + 3000; ++n)
    if (is_prime(n)) expected.push_back(n);
  EXPECT_EQ(ps, expected);
}

TEST(Legendre, Examples) {
  EXPECT_EQ(legendre_symbol(-1, 5), 1);
  EXPECT_EQ(legendre_symbol(-1, 7), -1);
  EXPECT_EQ(legendre_symbol(10, 5), 0);
}

TEST(Legendre, Properties) {
  for (Prime p : primes_in_range({3, 400})) {
    EXPECT_EQ(legendre_symbol(-1, p) == 1, p % 4 == 1) << p;
    for (long a = -6; a <= 6; ++a)
      for (long b = -6; b <= 6; ++b)
        EXPECT_EQ(legendre_symbol(a * b, p), legendre_symbol(a, p) * legendre_symbol(b, p));
  }
}
