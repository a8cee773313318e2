#include "supercong/exact_arith.hpp"

#include <sstream>

namespace supercong {

ExactRational::ExactRational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("ExactRational: zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

ExactRational::ExactRational(long num, long den) : ExactRational(BigInt(num), BigInt(den)) {}

ExactRational ExactRational::parse(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return ExactRational(BigInt(text));
    return ExactRational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not a rational number: '" + text + "'");
  }
}

ExactRational& ExactRational::operator/=(const ExactRational& o) {
  if (o.is_zero()) throw std::domain_error("ExactRational: division by zero");
  q_ /= o.q_;
  return *this;
}

ExactRational ExactRational::operator-() const { return ExactRational(mpq_class(-q_)); }

ExactRational ExactRational::pow(long e) const {
  if (e < 0) return (ExactRational(1) / *this).pow(-e);
  BigInt n, d;
  mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(e));
  // Powers of a reduced fraction stay reduced.
  mpq_class r;
  r.get_num() = n;
  r.get_den() = d;
  return ExactRational(std::move(r));
}

std::string ExactRational::to_string() const {
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const ExactRational& q) { return os << q.to_string(); }

long Valuation::value() const {
  if (!v_) throw std::logic_error("valuation of zero is infinite");
  return *v_;
}

// ---------------------------------------------------------------------------

BigInt prime_power(Prime p, unsigned long k) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), p, k);
  return r;
}

Residue::Residue(BigInt representative, Prime p, unsigned k) : rep_(std::move(representative)), p_(p), k_(k) {
  if (k == 0) throw std::invalid_argument("Residue: exponent must be positive");
  const BigInt mod = modulus();
  mpz_fdiv_r(rep_.get_mpz_t(), rep_.get_mpz_t(), mod.get_mpz_t());
}

BigInt Residue::modulus() const { return prime_power(p_, k_); }

void Residue::require_same_ring(const Residue& o) const {
  if (p_ != o.p_ || k_ != o.k_) throw ModulusMismatch("residues modulo different prime powers");
}

Residue Residue::operator+(const Residue& o) const {
  require_same_ring(o);
  return Residue(rep_ + o.rep_, p_, k_);
}

Residue Residue::operator-(const Residue& o) const {
  require_same_ring(o);
  return Residue(rep_ - o.rep_, p_, k_);
}

Residue Residue::operator*(const Residue& o) const {
  require_same_ring(o);
  return Residue(rep_ * o.rep_, p_, k_);
}

Residue Residue::truncate(unsigned j) const {
  if (j == 0 || j > k_) throw std::invalid_argument("Residue::truncate: bad exponent");
  return Residue(rep_, p_, j);
}

std::ostream& operator<<(std::ostream& os, const Residue& r) {
  return os << r.value() << " (mod " << r.prime() << "^" << r.exponent() << ")";
}

// ---------------------------------------------------------------------------

namespace {

long strip_factor(BigInt& n, Prime p) {
  if (n == 0) return 0;
  BigInt pp(static_cast<unsigned long>(p));
  return static_cast<long>(mpz_remove(n.get_mpz_t(), n.get_mpz_t(), pp.get_mpz_t()));
}

}  // namespace

Valuation p_valuation(const BigInt& n, Prime p) {
  if (n == 0) return Valuation::infinite();
  BigInt t = n;
  return Valuation::finite(strip_factor(t, p));
}

Valuation p_valuation(const ExactRational& q, Prime p) {
  if (q.is_zero()) return Valuation::infinite();
  BigInt num = q.numerator();
  BigInt den = q.denominator();
  return Valuation::finite(strip_factor(num, p) - strip_factor(den, p));
}

PAdicSplit p_adic_split(const ExactRational& q, Prime p) {
  if (q.is_zero()) throw std::domain_error("p_adic_split: zero has no unit part");
  BigInt num = q.numerator();
  BigInt den = q.denominator();
  const long v = strip_factor(num, p) - strip_factor(den, p);
  return {v, ExactRational(num, den)};
}

BigInt mod_inverse(const BigInt& a, const BigInt& modulus) {
  if (modulus <= 0) throw std::invalid_argument("mod_inverse: modulus must be positive");
  if (modulus == 1) return 0;
  BigInt g, s;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), nullptr, a.get_mpz_t(), modulus.get_mpz_t());
  if (g != 1) throw NotInvertible("mod_inverse: " + a.get_str() + " is not invertible modulo " + modulus.get_str());
  mpz_fdiv_r(s.get_mpz_t(), s.get_mpz_t(), modulus.get_mpz_t());
  return s;
}

BigInt canonical_representative(const ExactRational& q, const BigInt& m) {
  BigInt r = q.numerator() * mod_inverse(q.denominator(), m);
  mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t());
  return r;
}

Residue reduce_mod(const ExactRational& q, Prime p, unsigned k) {
  BigInt pp(static_cast<unsigned long>(p));
  if (mpz_divisible_p(q.denominator().get_mpz_t(), pp.get_mpz_t()))
    throw NotPIntegral("reduce_mod: " + q.to_string() + " is not " + std::to_string(p) + "-integral");
  return Residue(canonical_representative(q, prime_power(p, k)), p, k);
}

bool congruent_mod(const ExactRational& a, const ExactRational& b, Prime p, unsigned k) {
  if (a == b) return true;
  return p_valuation(a - b, p).at_least(static_cast<long>(k));
}

}  // namespace supercong
