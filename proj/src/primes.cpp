#include "supercong/primes.hpp"

#include <algorithm>
#include <cmath>

namespace supercong {

namespace {

std::vector<Prime> simple_sieve(std::uint64_t hi) {
  std::vector<Prime> out;
  if (hi < 2) return out;
  std::vector<bool> composite(hi + 1, false);
  for (std::uint64_t i = 2; i * i <= hi; ++i)
    if (!composite[i])
      for (std::uint64_t j = i * i; j <= hi; j += i) composite[j] = true;
  for (std::uint64_t i = 2; i <= hi; ++i)
    if (!composite[i]) out.push_back(i);
  return out;
}

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

std::vector<Prime> primes_in_range(PrimeRange range) {
  const std::uint64_t lo = std::max<std::uint64_t>(range.lo, 2);
  const std::uint64_t hi = range.hi;
  if (hi < lo) return {};

  if (hi <= kSegmentThreshold) {
    std::vector<Prime> all = simple_sieve(hi);
    all.erase(all.begin(), std::lower_bound(all.begin(), all.end(), lo));
    return all;
  }

  const std::vector<Prime> base = simple_sieve(isqrt(hi));
  std::vector<Prime> out;
  constexpr std::uint64_t kSegment = 1 << 18;
  std::vector<bool> composite;
  for (std::uint64_t seg_lo = lo; seg_lo <= hi; seg_lo += kSegment) {
    const std::uint64_t seg_hi = std::min(hi, seg_lo + kSegment - 1);
    composite.assign(seg_hi - seg_lo + 1, false);
    for (const Prime q : base) {
      if (q * q > seg_hi) break;
      std::uint64_t start = std::max(q * q, (seg_lo + q - 1) / q * q);
      for (std::uint64_t j = start; j <= seg_hi; j += q) composite[j - seg_lo] = true;
    }
    for (std::uint64_t n = seg_lo; n <= seg_hi; ++n)
      if (!composite[n - seg_lo]) out.push_back(n);
    if (seg_hi == hi) break;
  }
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

int legendre_symbol(const BigInt& a, Prime p) {
  const BigInt mod(static_cast<unsigned long>(p));
  BigInt base = a % mod;
  if (base < 0) base += mod;
  if (base == 0) return 0;
  BigInt r;
  mpz_powm_ui(r.get_mpz_t(), base.get_mpz_t(), (p - 1) / 2, mod.get_mpz_t());
  return r == 1 ? 1 : -1;
}

}  // namespace supercong
