#pragma once

#include <cstdint>
#include <vector>

#include "supercong/exact_arith.hpp"

namespace supercong {

/// Inclusive range [lo, hi] of candidate primes.
struct PrimeRange {
  std::uint64_t lo;
  std::uint64_t hi;
};

/// Ascending list of the primes in [lo, hi]. Uses a segmented sieve once
/// hi exceeds kSegmentThreshold.
std::vector<Prime> primes_in_range(PrimeRange range);

inline constexpr std::uint64_t kSegmentThreshold = 1'000'000;

bool is_prime(std::uint64_t n);

/// Legendre symbol (a | p) by Euler's criterion; p an odd prime.
int legendre_symbol(const BigInt& a, Prime p);
inline int legendre_symbol(long a, Prime p) { return legendre_symbol(BigInt(a), p); }

}  // namespace supercong
