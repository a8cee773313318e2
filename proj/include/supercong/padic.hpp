#pragma once

#include <memory>
#include <vector>

#include "supercong/exact_arith.hpp"

namespace supercong {

/// Raised when a fixed-precision computation cannot certify a requested digit.
struct PrecisionLoss : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Prime and working relative precision shared by a family of PAdicApprox values.
class PAdicContext {
 public:
  PAdicContext(Prime p, unsigned precision);

  Prime prime() const { return p_; }
  unsigned precision() const { return precision_; }
  /// p^e, served from a table for e <= 2 * precision.
  BigInt power(unsigned long e) const;

 private:
  Prime p_;
  unsigned precision_;
  std::vector<BigInt> powers_;
};

/// Element of Q_p known modulo p^abs_precision.
///
/// Nonzero values are p^valuation * unit with the unit known modulo
/// p^(abs_precision - valuation). A value whose known digits are all zero is
/// stored as "zero to absolute precision A". Exact zero has A = kExact.
/// Every operation propagates precision conservatively, so any digit the
/// type reports is correct.
class PAdicApprox {
 public:
  static constexpr long kExact = 1L << 40;

  PAdicApprox(std::shared_ptr<const PAdicContext> ctx, const ExactRational& q);
  PAdicApprox(std::shared_ptr<const PAdicContext> ctx, long n)
      : PAdicApprox(std::move(ctx), ExactRational(n)) {}

  Prime prime() const { return ctx_->prime(); }
  const std::shared_ptr<const PAdicContext>& context() const { return ctx_; }

  bool is_zero() const { return zero_; }
  long absolute_precision() const { return abs_; }
  /// Exact valuation for nonzero values; a lower bound (abs precision) for zero.
  long valuation() const { return zero_ ? abs_ : val_; }

  PAdicApprox operator-() const;
  PAdicApprox& operator+=(const PAdicApprox& o);
  PAdicApprox& operator-=(const PAdicApprox& o) { return *this += -o; }
  PAdicApprox& operator*=(const PAdicApprox& o);
  PAdicApprox& operator/=(const PAdicApprox& o);

  friend PAdicApprox operator+(PAdicApprox a, const PAdicApprox& b) { return a += b; }
  friend PAdicApprox operator-(PAdicApprox a, const PAdicApprox& b) { return a -= b; }
  friend PAdicApprox operator*(PAdicApprox a, const PAdicApprox& b) { return a *= b; }
  friend PAdicApprox operator/(PAdicApprox a, const PAdicApprox& b) { return a /= b; }

  PAdicApprox pow(long e) const;

  /// Decides v_p(value) >= k; throws PrecisionLoss if the known digits cannot.
  bool valuation_at_least(long k) const;

  /// Value mod p^k. Throws NotPIntegral for negative valuation and
  /// PrecisionLoss when fewer than k digits are known.
  Residue residue(unsigned k) const;

 private:
  PAdicApprox(std::shared_ptr<const PAdicContext> ctx) : ctx_(std::move(ctx)) {}
  void normalize();

  std::shared_ptr<const PAdicContext> ctx_;
  bool zero_ = true;
  long val_ = 0;
  long abs_ = kExact;
  BigInt unit_;  // in [0, p^(abs_ - val_)) when !zero_
};

/// a == b (mod p^k) decided on certified digits.
bool congruent_mod(const PAdicApprox& a, const PAdicApprox& b, unsigned k);

}  // namespace supercong
