#pragma once

#include <memory>

#include "supercong/exact_arith.hpp"
#include "supercong/padic.hpp"

namespace supercong {

// A "field" lifts exact rationals into the number type a formula is evaluated
// in. Formulas written against a field run either exactly or in fixed
// precision p-adic arithmetic.

struct ExactField {
  using Num = ExactRational;
  Num operator()(const ExactRational& q) const { return q; }
  Num operator()(long n) const { return ExactRational(n); }
  Num operator()(long num, long den) const { return ExactRational(num, den); }
};

struct PAdicField {
  using Num = PAdicApprox;
  std::shared_ptr<const PAdicContext> ctx;

  PAdicField(Prime p, unsigned precision) : ctx(std::make_shared<const PAdicContext>(p, precision)) {}

  Num operator()(const ExactRational& q) const { return Num(ctx, q); }
  Num operator()(long n) const { return Num(ctx, n); }
  Num operator()(long num, long den) const { return Num(ctx, ExactRational(num, den)); }
};

inline bool has_valuation_at_least(const ExactRational& q, Prime p, long k) {
  return p_valuation(q, p).at_least(k);
}

inline bool has_valuation_at_least(const PAdicApprox& q, Prime /*p*/, long k) { return q.valuation_at_least(k); }

}  // namespace supercong
