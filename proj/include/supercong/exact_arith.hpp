#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

namespace supercong {

using BigInt = mpz_class;
using Prime = std::uint64_t;

// ---------------------------------------------------------------------------
// Errors

struct NotPIntegral : std::domain_error {
  using std::domain_error::domain_error;
};

struct NotInvertible : std::domain_error {
  using std::domain_error::domain_error;
};

struct ModulusMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// ---------------------------------------------------------------------------
// ExactRational
//
// Arbitrary precision fraction, always in lowest terms with a positive
// denominator. Zero is 0/1.

class ExactRational {
 public:
  ExactRational() = default;
  ExactRational(long n) : q_(n) {}  // NOLINT(google-explicit-constructor)
  ExactRational(const BigInt& n) : q_(n) {}  // NOLINT(google-explicit-constructor)
  ExactRational(const BigInt& num, const BigInt& den);
  ExactRational(long num, long den);

  /// Parses "n", "n/d" or "-n/d".
  static ExactRational parse(const std::string& text);

  BigInt numerator() const { return q_.get_num(); }
  BigInt denominator() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  ExactRational& operator+=(const ExactRational& o) { q_ += o.q_; return *this; }
  ExactRational& operator-=(const ExactRational& o) { q_ -= o.q_; return *this; }
  ExactRational& operator*=(const ExactRational& o) { q_ *= o.q_; return *this; }
  ExactRational& operator/=(const ExactRational& o);

  friend ExactRational operator+(ExactRational a, const ExactRational& b) { return a += b; }
  friend ExactRational operator-(ExactRational a, const ExactRational& b) { return a -= b; }
  friend ExactRational operator*(ExactRational a, const ExactRational& b) { return a *= b; }
  friend ExactRational operator/(ExactRational a, const ExactRational& b) { return a /= b; }
  ExactRational operator-() const;

  friend bool operator==(const ExactRational& a, const ExactRational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// Integer power; negative exponents invert (the value must be nonzero).
  ExactRational pow(long e) const;

  /// "num/den", denominator always printed.
  std::string to_string() const;

  const mpq_class& raw() const { return q_; }

 private:
  explicit ExactRational(mpq_class q) : q_(std::move(q)) {}
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const ExactRational& q);

// ---------------------------------------------------------------------------
// Valuation: an integer or +infinity (the valuation of zero).

class Valuation {
 public:
  static Valuation infinite() { return Valuation{}; }
  static Valuation finite(long v) { return Valuation{v}; }

  bool is_infinite() const { return !v_.has_value(); }
  /// Throws std::logic_error on the infinite marker.
  long value() const;

  /// True iff this valuation is at least k (always true for infinity).
  bool at_least(long k) const { return is_infinite() || *v_ >= k; }

  friend bool operator==(const Valuation&, const Valuation&) = default;
  std::string to_string() const { return is_infinite() ? "inf" : std::to_string(*v_); }

 private:
  Valuation() = default;
  explicit Valuation(long v) : v_(v) {}
  std::optional<long> v_;
};

// ---------------------------------------------------------------------------
// Residue modulo a prime power p^k.

class Residue {
 public:
  Residue(BigInt representative, Prime p, unsigned k);

  const BigInt& value() const { return rep_; }
  Prime prime() const { return p_; }
  unsigned exponent() const { return k_; }
  BigInt modulus() const;

  Residue operator+(const Residue& o) const;
  Residue operator-(const Residue& o) const;
  Residue operator*(const Residue& o) const;

  /// Reduction to a coarser modulus p^j, j <= k.
  Residue truncate(unsigned j) const;

  friend bool operator==(const Residue&, const Residue&) = default;

 private:
  void require_same_ring(const Residue& o) const;
  BigInt rep_;
  Prime p_;
  unsigned k_;
};

std::ostream& operator<<(std::ostream& os, const Residue& r);

/// q = p^valuation * unit, unit's numerator and denominator coprime to p.
struct PAdicSplit {
  long valuation;
  ExactRational unit;
};

BigInt prime_power(Prime p, unsigned long k);

/// p-adic valuation of q; the infinite marker for q = 0.
Valuation p_valuation(const ExactRational& q, Prime p);
/// p-adic valuation of a nonzero integer; infinite for 0.
Valuation p_valuation(const BigInt& n, Prime p);

/// Throws std::domain_error for q = 0.
PAdicSplit p_adic_split(const ExactRational& q, Prime p);

/// Inverse of a modulo `modulus` in [0, modulus); throws NotInvertible.
BigInt mod_inverse(const BigInt& a, const BigInt& modulus);

/// [q]_m: numerator * denominator^{-1} mod m, in [0, m).
BigInt canonical_representative(const ExactRational& q, const BigInt& m);

/// q mod p^k for p-integral q; throws NotPIntegral otherwise.
Residue reduce_mod(const ExactRational& q, Prime p, unsigned k);

/// a == b (mod p^k) in the p-adic sense: a == b or v_p(a - b) >= k.
bool congruent_mod(const ExactRational& a, const ExactRational& b, Prime p, unsigned k);

}  // namespace supercong
