#include "supercong/sums.hpp"

#include <numeric>

namespace supercong {

RationalParameter RationalParameter::make(long r, long m) {
  if (!(0 < r && r < m)) throw std::invalid_argument("parameter r/m needs 0 < r < m");
  const long g = std::gcd(r, m);
  return RationalParameter(r / g, m / g, g != 1);
}

long RationalParameter::rep_r_over_p(Prime p) const {
  if (!compatible_with(p))
    throw ParameterClash("p = " + std::to_string(p) + " divides the denominator of x = " + to_string());
  return canonical_representative(ExactRational(r_, static_cast<long>(p)), BigInt(m_)).get_si();
}

long RationalParameter::rep_neg_r_over_p(Prime p) const {
  if (!compatible_with(p))
    throw ParameterClash("p = " + std::to_string(p) + " divides the denominator of x = " + to_string());
  return canonical_representative(ExactRational(-r_, static_cast<long>(p)), BigInt(m_)).get_si();
}

ExactRational RationalParameter::t(Prime p) const {
  return ExactRational(m_, rep_r_over_p(p) * rep_neg_r_over_p(p));
}

std::vector<RationalParameter> parameters_up_to(long m_max) {
  std::vector<RationalParameter> out;
  for (long m = 2; m <= m_max; ++m)
    for (long r = 1; r < m; ++r)
      if (std::gcd(r, m) == 1) out.push_back(RationalParameter::make(r, m));
  return out;
}

// ---------------------------------------------------------------------------

Composition::Composition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("Composition: needs at least one part");
  for (unsigned s : parts_)
    if (s == 0) throw std::invalid_argument("Composition: parts must be positive");
}

unsigned Composition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0u); }

std::string Composition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

namespace {

void compose(unsigned remaining, unsigned slots, std::vector<unsigned>& prefix, std::vector<Composition>& out) {
  if (slots == 1) {
    prefix.push_back(remaining);
    out.emplace_back(prefix);
    prefix.pop_back();
    return;
  }
  for (unsigned first = 1; first + (slots - 1) <= remaining; ++first) {
    prefix.push_back(first);
    compose(remaining - first, slots - 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Composition> compositions_of_weight(unsigned r, unsigned d) {
  std::vector<Composition> out;
  if (d == 0 || d > r) return out;
  std::vector<unsigned> prefix;
  compose(r, d, prefix, out);
  return out;
}

// ---------------------------------------------------------------------------

ExactRational pochhammer(const ExactRational& x, unsigned long n) {
  ExactRational acc(1);
  for (unsigned long i = 0; i < n; ++i) acc *= x + ExactRational(static_cast<long>(i));
  return acc;
}

ExactRational hypergeometric_coefficient(const ExactRational& x, unsigned long n) {
  return series::coefficient(ExactField{}, x, n);
}

ExactRational beta(const RationalParameter& param, Prime p) {
  if (!param.compatible_with(p))
    throw ParameterClash("p = " + std::to_string(p) + " divides the denominator of x = " + param.to_string());
  return hypergeometric_coefficient(param.x(), p);
}

ExactRational pochhammer_quotient_exact(const RationalParameter& param, Prime p) {
  return series::pochhammer_quotient(ExactField{}, param, p);
}

Residue pochhammer_quotient(const RationalParameter& param, Prime p, unsigned k) {
  const ExactRational q = pochhammer_quotient_exact(param, p);
  try {
    return reduce_mod(q, p, k);
  } catch (const NotPIntegral&) {
    throw InternalInvariantViolation("Q_p(" + param.to_string() + ") is not p-integral for p = " + std::to_string(p));
  }
}

ExactRational harmonic_sum(unsigned long n, unsigned r) { return series::harmonic(ExactField{}, n, r); }

ExactRational multiple_harmonic_sum(unsigned long n, const Composition& s) {
  // column[k] = H_k(s_1..s_i), built one depth at a time.
  std::vector<ExactRational> column(n + 1, ExactRational(1));
  for (unsigned si : s.parts()) {
    std::vector<ExactRational> next(n + 1);
    for (unsigned long k = 1; k <= n; ++k)
      next[k] = next[k - 1] + column[k - 1] / ExactRational(static_cast<long>(k)).pow(si);
    column = std::move(next);
  }
  return column[n];
}

const std::vector<ExactRational>& MhsTable::column(const std::vector<unsigned>& parts) {
  if (auto it = memo_.find(parts); it != memo_.end()) return it->second;
  std::vector<ExactRational> col(n_max_ + 1);
  if (parts.empty()) {
    col.assign(n_max_ + 1, ExactRational(1));
  } else {
    const std::vector<unsigned> prefix(parts.begin(), parts.end() - 1);
    const std::vector<ExactRational>& prev = column(prefix);  // map nodes are stable
    const unsigned last = parts.back();
    for (unsigned long k = 1; k <= n_max_; ++k)
      col[k] = col[k - 1] + prev[k - 1] / ExactRational(static_cast<long>(k)).pow(last);
  }
  return memo_.emplace(parts, std::move(col)).first->second;
}

const ExactRational& MhsTable::value(unsigned long n, const Composition& s) {
  if (n > n_max_) throw std::out_of_range("MhsTable: n exceeds table size");
  return column(s.parts())[n];
}

// ---------------------------------------------------------------------------

ExactRational truncated_hypergeometric_sum(const RationalParameter& param, unsigned long a, unsigned b, Prime p) {
  if (!param.compatible_with(p))
    throw ParameterClash("p = " + std::to_string(p) + " divides the denominator of x = " + param.to_string());
  return series::window_sum(ExactField{}, param.x(), a, b, p);
}

Residue truncated_hypergeometric_sum_mod(const RationalParameter& param, unsigned long a, unsigned b, Prime p,
                                         unsigned k, unsigned slack) {
  if (!param.compatible_with(p))
    throw ParameterClash("p = " + std::to_string(p) + " divides the denominator of x = " + param.to_string());
  for (unsigned extra = slack;; extra += 4) {
    try {
      const PAdicField f(p, k + extra);
      return series::window_sum(f, param.x(), a, b, p).residue(k);
    } catch (const PrecisionLoss&) {
      if (extra > 64) throw;
    }
  }
}

}  // namespace supercong
