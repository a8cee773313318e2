#pragma once

#include <map>
#include <string>
#include <vector>

#include "supercong/exact_arith.hpp"
#include "supercong/numeric.hpp"

namespace supercong {

/// gcd(m, p) != 1 for a parameter x = r/m.
struct ParameterClash : std::domain_error {
  using std::domain_error::domain_error;
};

/// A quantity that must be p-integral was not; always a bug.
struct InternalInvariantViolation : std::logic_error {
  using std::logic_error::logic_error;
};

/// x = r/m with 0 < r < m, stored reduced.
class RationalParameter {
 public:
  /// Reduces r/m to lowest terms (was_reduced() reports it). Throws
  /// std::invalid_argument unless 0 < r < m.
  static RationalParameter make(long r, long m);

  long r() const { return r_; }
  long m() const { return m_; }
  bool was_reduced() const { return reduced_; }

  ExactRational x() const { return ExactRational(r_, m_); }
  ExactRational one_minus_x() const { return ExactRational(m_ - r_, m_); }

  bool compatible_with(Prime p) const { return m_ % static_cast<long>(p) != 0; }

  /// [r/p]_m, in 1..m-1. Throws ParameterClash when p | m.
  long rep_r_over_p(Prime p) const;
  /// [-r/p]_m, in 1..m-1.
  long rep_neg_r_over_p(Prime p) const;
  /// t = 1/[r/p]_m + 1/[-r/p]_m = m / ([r/p]_m [-r/p]_m).
  ExactRational t(Prime p) const;

  std::string to_string() const { return std::to_string(r_) + "/" + std::to_string(m_); }

  friend bool operator==(const RationalParameter&, const RationalParameter&) = default;

 private:
  RationalParameter(long r, long m, bool reduced) : r_(r), m_(m), reduced_(reduced) {}
  long r_;
  long m_;
  bool reduced_;
};

/// All reduced parameters r/m with 2 <= m <= m_max, sorted by (m, r).
std::vector<RationalParameter> parameters_up_to(long m_max);

/// Ordered tuple of positive integers (s_1, ..., s_d).
class Composition {
 public:
  explicit Composition(std::vector<unsigned> parts);

  const std::vector<unsigned>& parts() const { return parts_; }
  std::size_t depth() const { return parts_.size(); }
  unsigned weight() const;
  std::string to_string() const;

  friend auto operator<=>(const Composition&, const Composition&) = default;

 private:
  std::vector<unsigned> parts_;
};

/// Compositions of r into exactly d parts, lexicographic order.
std::vector<Composition> compositions_of_weight(unsigned r, unsigned d);

/// (x)_n = x (x+1) ... (x+n-1).
ExactRational pochhammer(const ExactRational& x, unsigned long n);

/// (x)_n (1-x)_n / (1)_n^2.
ExactRational hypergeometric_coefficient(const ExactRational& x, unsigned long n);

/// beta = (x)_p (1-x)_p / (1)_p^2.
ExactRational beta(const RationalParameter& param, Prime p);

/// Q_p(x) = (1 - beta m^2 / ([r/p]_m [-r/p]_m)) / p, exactly.
ExactRational pochhammer_quotient_exact(const RationalParameter& param, Prime p);

/// Q_p(x) mod p^k. Requires p > 3 and gcd(m, p) = 1.
Residue pochhammer_quotient(const RationalParameter& param, Prime p, unsigned k);

/// H_n(r) = sum_{k=1}^n 1/k^r.
ExactRational harmonic_sum(unsigned long n, unsigned r);

/// H_n(s_1..s_d) over 1 <= k_1 < ... < k_d <= n.
ExactRational multiple_harmonic_sum(unsigned long n, const Composition& s);

/// Memoized H_n(s) for all n <= n_max, keyed by composition prefix.
/// Not thread-safe; use one per worker or fill before sharing.
class MhsTable {
 public:
  explicit MhsTable(unsigned long n_max) : n_max_(n_max) {}

  const ExactRational& value(unsigned long n, const Composition& s);
  unsigned long n_max() const { return n_max_; }

 private:
  const std::vector<ExactRational>& column(const std::vector<unsigned>& parts);

  unsigned long n_max_;
  std::map<std::vector<unsigned>, std::vector<ExactRational>> memo_;
};

/// S_a(b) = sum_{k=ap+1}^{ap+p-1} (x)_k (1-x)_k / (1)_k^2 / k^b, exactly.
ExactRational truncated_hypergeometric_sum(const RationalParameter& param, unsigned long a, unsigned b, Prime p);

/// S_a(b) mod p^k through fixed precision p-adic arithmetic (working
/// precision k + slack, raised automatically on precision loss).
Residue truncated_hypergeometric_sum_mod(const RationalParameter& param, unsigned long a, unsigned b, Prime p,
                                         unsigned k, unsigned slack = 3);

// ---------------------------------------------------------------------------
// Formula templates shared by the exact path and the p-adic fast path.

namespace series {

/// Running value of (x)_n (1-x)_n / (1)_n^2 for n = 0, 1, 2, ...
template <class Field>
class CoefficientWalk {
 public:
  using Num = typename Field::Num;

  CoefficientWalk(const Field& f, const ExactRational& x) : f_(f), x_(x), y_(ExactRational(1) - x), term_(f(1)) {}

  unsigned long index() const { return n_; }
  const Num& value() const { return term_; }

  void advance() {
    const ExactRational k(static_cast<long>(n_));
    const ExactRational k1(static_cast<long>(n_ + 1));
    term_ *= f_((x_ + k) * (y_ + k) / (k1 * k1));
    ++n_;
  }

  void advance_to(unsigned long n) {
    while (n_ < n) advance();
  }

 private:
  Field f_;
  ExactRational x_, y_;
  Num term_;
  unsigned long n_ = 0;
};

template <class Field>
typename Field::Num coefficient(const Field& f, const ExactRational& x, unsigned long n) {
  CoefficientWalk<Field> walk(f, x);
  walk.advance_to(n);
  return walk.value();
}

/// sum_{k=lo}^{hi} coeff_k * weight(k), weight returning a Num.
template <class Field, class Weight>
typename Field::Num weighted_window(const Field& f, const ExactRational& x, unsigned long lo, unsigned long hi,
                                   Weight&& weight) {
  typename Field::Num acc = f(0);
  CoefficientWalk<Field> walk(f, x);
  walk.advance_to(lo);
  for (unsigned long k = lo; k <= hi; ++k) {
    acc += walk.value() * weight(k);
    if (k < hi) walk.advance();
  }
  return acc;
}

template <class Field>
typename Field::Num window_sum(const Field& f, const ExactRational& x, unsigned long a, unsigned b, Prime p) {
  const unsigned long lo = a * p + 1;
  const unsigned long hi = a * p + p - 1;
  if (hi < lo) return f(0);
  return weighted_window(f, x, lo, hi,
                         [&](unsigned long k) { return f(ExactRational(1, 1) / ExactRational(static_cast<long>(k)).pow(b)); });
}

template <class Field>
typename Field::Num pochhammer_quotient(const Field& f, const RationalParameter& param, Prime p) {
  const typename Field::Num b = coefficient(f, param.x(), p);
  const long a1 = param.rep_r_over_p(p);
  const long a2 = param.rep_neg_r_over_p(p);
  const typename Field::Num inner = f(1) - b * f(ExactRational(param.m() * param.m(), a1 * a2));
  if (!has_valuation_at_least(inner, p, 1))
    throw InternalInvariantViolation("Pochhammer quotient numerator is not divisible by p for x = " +
                                     param.to_string() + ", p = " + std::to_string(p));
  return inner / f(static_cast<long>(p));
}

template <class Field>
typename Field::Num harmonic(const Field& f, unsigned long n, unsigned r) {
  typename Field::Num acc = f(0);
  for (unsigned long k = 1; k <= n; ++k) acc += f(ExactRational(1) / ExactRational(static_cast<long>(k)).pow(r));
  return acc;
}

}  // namespace series

}  // namespace supercong
