#pragma once

#include <shared_mutex>
#include <vector>

#include "supercong/exact_arith.hpp"

namespace supercong {

/// Memo table of Bernoulli numbers B_0..B_n computed by the recursion
///   B_0 = 1,  sum_{k=0}^{n-1} C(n,k) B_k = 0  (n >= 2),
/// which fixes the convention B_1 = -1/2.
///
/// Campaigns call ensure() with their largest index before starting
/// workers; afterwards the table is only read. Concurrent growth is still
/// safe (guarded by a shared mutex) but serializes the callers.
class BernoulliCache {
 public:
  BernoulliCache();

  /// Populates every index <= n.
  void ensure(unsigned n);
  /// B_n, growing the table when needed.
  ExactRational number(unsigned n);
  /// Highest populated index.
  unsigned high_water_mark() const;

  /// Process-wide cache used by the free functions below.
  static BernoulliCache& global();

 private:
  mutable std::shared_mutex mutex_;
  std::vector<ExactRational> table_;
};

ExactRational bernoulli_number(unsigned n);

/// B_n(x) = sum_k C(n,k) B_k x^(n-k).
ExactRational bernoulli_polynomial(unsigned n, const ExactRational& x);

/// C(n, k); zero outside 0 <= k <= n.
BigInt binomial(unsigned long n, long k);

/// (x^(p-1) - 1) / p as an exact rational.
ExactRational fermat_quotient_exact(const ExactRational& x, Prime p);

/// Fermat quotient mod p^k; x must be a p-adic unit (NotPIntegral otherwise).
Residue fermat_quotient(const ExactRational& x, Prime p, unsigned k);

}  // namespace supercong
