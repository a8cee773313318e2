#include "supercong/special_values.hpp"

#include <mutex>

namespace supercong {

BernoulliCache::BernoulliCache() : table_{ExactRational(1)} {}

BernoulliCache& BernoulliCache::global() {
  static BernoulliCache cache;
  return cache;
}

unsigned BernoulliCache::high_water_mark() const {
  std::shared_lock lock(mutex_);
  return static_cast<unsigned>(table_.size() - 1);
}

void BernoulliCache::ensure(unsigned n) {
  std::unique_lock lock(mutex_);
  while (table_.size() <= n) {
    // Index j comes from the recursion at n = j + 1.
    const unsigned long j = table_.size();
    const unsigned long rows = j + 1;
    ExactRational acc;
    BigInt c = 1;  // C(rows, k)
    for (unsigned long k = 0; k < j; ++k) {
      if (!table_[k].is_zero()) acc += ExactRational(c) * table_[k];
      c = c * (rows - k) / (k + 1);
    }
    table_.push_back(-acc / ExactRational(static_cast<long>(rows)));
  }
}

ExactRational BernoulliCache::number(unsigned n) {
  {
    std::shared_lock lock(mutex_);
    if (n < table_.size()) return table_[n];
  }
  ensure(n);
  std::shared_lock lock(mutex_);
  return table_[n];
}

ExactRational bernoulli_number(unsigned n) { return BernoulliCache::global().number(n); }

ExactRational bernoulli_polynomial(unsigned n, const ExactRational& x) {
  BernoulliCache& cache = BernoulliCache::global();
  cache.ensure(n);
  // Horner in x: coefficients C(n,k) B_k of x^(n-k), highest power first.
  ExactRational acc;
  for (unsigned k = 0; k <= n; ++k) acc = acc * x + ExactRational(binomial(n, k)) * cache.number(k);
  return acc;
}

BigInt binomial(unsigned long n, long k) {
  if (k < 0 || static_cast<unsigned long>(k) > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, static_cast<unsigned long>(k));
  return r;
}

ExactRational fermat_quotient_exact(const ExactRational& x, Prime p) {
  if (!p_valuation(x, p).at_least(0) || p_valuation(x, p).at_least(1))
    throw NotPIntegral("fermat_quotient: argument is not a p-adic unit");
  return (x.pow(static_cast<long>(p - 1)) - 1) / ExactRational(static_cast<long>(p));
}

Residue fermat_quotient(const ExactRational& x, Prime p, unsigned k) {
  return reduce_mod(fermat_quotient_exact(x, p), p, k);
}

}  // namespace supercong
