#include "supercong/padic.hpp"

#include <algorithm>

namespace supercong {

PAdicContext::PAdicContext(Prime p, unsigned precision) : p_(p), precision_(precision) {
  if (precision == 0) throw std::invalid_argument("PAdicContext: precision must be positive");
  powers_.reserve(2 * precision + 1);
  powers_.emplace_back(1);
  for (unsigned i = 1; i <= 2 * precision; ++i) powers_.push_back(powers_.back() * static_cast<unsigned long>(p));
}

BigInt PAdicContext::power(unsigned long e) const {
  if (e < powers_.size()) return powers_[e];
  return prime_power(p_, e);
}

PAdicApprox::PAdicApprox(std::shared_ptr<const PAdicContext> ctx, const ExactRational& q) : ctx_(std::move(ctx)) {
  if (q.is_zero()) return;  // exact zero
  const PAdicSplit s = p_adic_split(q, ctx_->prime());
  zero_ = false;
  val_ = s.valuation;
  abs_ = val_ + ctx_->precision();
  unit_ = canonical_representative(s.unit, ctx_->power(ctx_->precision()));
}

void PAdicApprox::normalize() {
  if (zero_) return;
  const long rel = abs_ - val_;
  if (rel <= 0 || unit_ == 0) {
    zero_ = true;
    unit_ = 0;
    return;
  }
  BigInt pp(static_cast<unsigned long>(ctx_->prime()));
  const long shift = static_cast<long>(mpz_remove(unit_.get_mpz_t(), unit_.get_mpz_t(), pp.get_mpz_t()));
  val_ += shift;
  if (val_ >= abs_) {
    zero_ = true;
    unit_ = 0;
  }
}

PAdicApprox PAdicApprox::operator-() const {
  PAdicApprox r = *this;
  if (!zero_) {
    const BigInt mod = ctx_->power(static_cast<unsigned long>(abs_ - val_));
    r.unit_ = mod - unit_;
    if (r.unit_ == mod) r.unit_ = 0;
  }
  return r;
}

PAdicApprox& PAdicApprox::operator+=(const PAdicApprox& o) {
  const long abs = std::min(abs_, o.abs_);
  if (o.zero_) {
    abs_ = abs;
    normalize();
    return *this;
  }
  if (zero_) {
    *this = PAdicApprox(o);
    abs_ = abs;
    normalize();
    return *this;
  }
  const long lo = std::min(val_, o.val_);
  if (lo >= abs) {
    zero_ = true;
    unit_ = 0;
    abs_ = abs;
    return *this;
  }
  const BigInt mod = ctx_->power(static_cast<unsigned long>(abs - lo));
  BigInt sum = unit_ * ctx_->power(static_cast<unsigned long>(val_ - lo)) +
               o.unit_ * ctx_->power(static_cast<unsigned long>(o.val_ - lo));
  mpz_fdiv_r(sum.get_mpz_t(), sum.get_mpz_t(), mod.get_mpz_t());
  unit_ = std::move(sum);
  val_ = lo;
  abs_ = abs;
  normalize();
  return *this;
}

PAdicApprox& PAdicApprox::operator*=(const PAdicApprox& o) {
  if (zero_ || o.zero_) {
    // Known-zero digits propagate through the other factor's valuation.
    const long a = zero_ ? abs_ : val_;
    const long b = o.zero_ ? o.abs_ : o.val_;
    const bool exact = (zero_ && abs_ == kExact) || (o.zero_ && o.abs_ == kExact);
    zero_ = true;
    unit_ = 0;
    abs_ = exact ? kExact : a + b;
    return *this;
  }
  const long rel = std::min(abs_ - val_, o.abs_ - o.val_);
  const BigInt mod = ctx_->power(static_cast<unsigned long>(rel));
  unit_ *= o.unit_;
  mpz_fdiv_r(unit_.get_mpz_t(), unit_.get_mpz_t(), mod.get_mpz_t());
  val_ += o.val_;
  abs_ = val_ + rel;
  return *this;
}

PAdicApprox& PAdicApprox::operator/=(const PAdicApprox& o) {
  if (o.zero_) throw PrecisionLoss("PAdicApprox: divisor indistinguishable from zero");
  if (zero_) {
    if (abs_ != kExact) abs_ -= o.val_;
    return *this;
  }
  const long rel = std::min(abs_ - val_, o.abs_ - o.val_);
  const BigInt mod = ctx_->power(static_cast<unsigned long>(rel));
  unit_ *= mod_inverse(o.unit_ % mod, mod);
  mpz_fdiv_r(unit_.get_mpz_t(), unit_.get_mpz_t(), mod.get_mpz_t());
  val_ -= o.val_;
  abs_ = val_ + rel;
  return *this;
}

PAdicApprox PAdicApprox::pow(long e) const {
  if (e < 0) return PAdicApprox(ctx_, 1) / pow(-e);
  PAdicApprox result(ctx_, 1);
  PAdicApprox base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

bool PAdicApprox::valuation_at_least(long k) const {
  if (!zero_) return val_ >= k;
  if (abs_ >= k) return true;
  throw PrecisionLoss("PAdicApprox: only " + std::to_string(abs_) + " digits known, " + std::to_string(k) +
                      " requested");
}

Residue PAdicApprox::residue(unsigned k) const {
  const Prime p = ctx_->prime();
  if (!zero_ && val_ < 0) throw NotPIntegral("PAdicApprox::residue: negative valuation");
  if (abs_ < static_cast<long>(k))
    throw PrecisionLoss("PAdicApprox: only " + std::to_string(abs_) + " digits known, " + std::to_string(k) +
                        " requested");
  if (zero_) return Residue(0, p, k);
  return Residue(unit_ * ctx_->power(static_cast<unsigned long>(val_)), p, k);
}

bool congruent_mod(const PAdicApprox& a, const PAdicApprox& b, unsigned k) {
  return (a - b).valuation_at_least(static_cast<long>(k));
}

}  // namespace supercong
