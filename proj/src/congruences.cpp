#include "supercong/congruences.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "supercong/primes.hpp"
#include "supercong/special_values.hpp"

namespace supercong {

std::string to_string(CheckCategory c) { return c == CheckCategory::Theorem ? "theorem" : "conjecture"; }
std::string to_string(EvalPath p) { return p == EvalPath::Exact ? "exact" : "modular"; }

bool record_less(const CheckRecord& x, const CheckRecord& y) {
  return std::tie(x.check, x.p, x.r, x.m, x.a) < std::tie(y.check, y.p, y.r, y.m, y.a);
}

bool same_outcome(const CheckRecord& x, const CheckRecord& y) {
  return x.pass == y.pass && x.skipped == y.skipped && x.lhs_residue == y.lhs_residue &&
         x.rhs_residue == y.rhs_residue;
}

namespace {

ExactRational q(long n) { return ExactRational(n); }

RationalParameter param_of(const CheckTask& t) { return RationalParameter::make(*t.r, *t.m); }

long half(Prime p) { return static_cast<long>((p - 1) / 2); }

ExactRational bernoulli_p3(Prime p) { return bernoulli_number(static_cast<unsigned>(p - 3)); }

template <class F>
typename F::Num fermat_quotient_of(const F& f, const ExactRational& x, Prime p) {
  return (f(x).pow(static_cast<long>(p - 1)) - f(1)) / f(static_cast<long>(p));
}

// Coefficients (x)_n (1-x)_n / (1)_n^2 at several indices, one walk.
template <class F>
std::map<unsigned long, typename F::Num> coefficients_at(const F& f, const ExactRational& x,
                                                         std::vector<unsigned long> indices) {
  std::sort(indices.begin(), indices.end());
  std::map<unsigned long, typename F::Num> out;
  series::CoefficientWalk<F> walk(f, x);
  for (unsigned long n : indices) {
    walk.advance_to(n);
    out.emplace(n, walk.value());
  }
  return out;
}

// --- checks ---------------------------------------------------------------

struct PartialFraction {
  template <class F>
  Sides<typename F::Num> operator()(const F& f, const CheckTask& t) const {
    const RationalParameter x = param_of(t);
    auto lhs = f(1);
    for (unsigned long j = 0; j < t.p; ++j) lhs *= f(q(static_cast<long>(j + 1)) / (x.x() + q(static_cast<long>(j))));
    return {lhs, f(x.m(), x.rep_r_over_p(t.p))};
  }
};

long quotient_fermat_base(long m) {
  switch (m) {
    case 2: return 16;
    case 3: return 27;
    case 4: return 64;
    case 6: return 16 * 27;
    default: throw std::invalid_argument("quotient_fermat: case must be one of 1/2, 1/3, 1/4, 1/6");
  }
}

struct QuotientFermat {
  template <class F>
  Sides<typename F::Num> operator()(const F& f, const CheckTask& t) const {
    const RationalParameter x = RationalParameter::make(1, *t.m);
    auto lhs = series::pochhammer_quotient(f, x, t.p);
    auto rhs = -fermat_quotient_of(f, ExactRational(1, quotient_fermat_base(*t.m)), t.p);
    return {lhs, rhs};
  }
};

struct Lemma1Harmonic {
  template <class F>
  Sides<typename F::Num> operator()(const F& f, const CheckTask& t) const {
    const RationalParameter x = param_of(t);
    const long a = *t.a;
    const long p = static_cast<long>(t.p);
    const long m = x.m();
    auto lhs = f(0);
    for (long k = 0; k < a * p; ++k) lhs += f(ExactRational(1) / (x.x() + q(k)) + ExactRational(1) / (x.one_minus_x() + q(k)));
    ExactRational shifted;
    const long r1 = x.rep_r_over_p(t.p);
    const long r2 = x.rep_neg_r_over_p(t.p);
    for (long j = 0; j < a; ++j) shifted += ExactRational(1, r1 + j * m) + ExactRational(1, r2 + j * m);
    lhs -= f(ExactRational(m, p) * shifted);
    const ExactRational ap = q(a * p);
    const auto rhs = f(ExactRational(-2, 3) * ap * ap * bernoulli_polynomial(static_cast<unsigned>(p - 3), x.x()));
    return {lhs, rhs};
  }
};

struct Lemma1Product {
  template <class F>
  Sides<typename F::Num> operator()(const F& f, const CheckTask& t) const {
    const RationalParameter x = param_of(t);
    const unsigned long a = static_cast<unsigned long>(*t.a);
    const unsigned long p = t.p;
    auto c = coefficients_at(f, x.x(), {p, (a - 1) * p, a * p});
    const long al = static_cast<long>(a);
    const ExactRational correction =
        ExactRational(1) + ExactRational(al * (al - 1) * x.m() * x.m(), x.rep_r_over_p(p) * x.rep_neg_r_over_p(p));
    auto rhs = c.at((a - 1) * p) * c.at(p) / f(al * al) * f(correction);
    return {c.at(a * p), rhs};
  }
};

struct Lemma2Shift {
  template <class F>
  Sides<typename F::Num> operator()(const F& f, const CheckTask& t) const {
    const RationalParameter x = param_of(t);
    const unsigned long ap = static_cast<unsigned long>(*t.a) * t.p;
    auto lhs = series::window_sum(f, x.x(), static_cast<unsigned long>(*t.a), 1, t.p);
    auto tail = series::weighted_window(f, x.x(), 1, t.p - 1,
                                        [&](unsigned long k) { return f(ExactRational(1, static_cast<long>(ap + k))); });
    return {lhs, series::coefficient(f, x.x(), ap) * tail};
  }
};

struct MainA {
  template <class F>
  Sides<typename F::Num> operator()(const F& f, const CheckTask& t) const {
    const RationalParameter x = param_of(t);
    auto s = series::window_sum(f, x.x(), 0, 1, t.p);
    auto qp = series::pochhammer_quotient(f, x, t.p);
    return {s, qp + f(static_cast<long>(t.p), 2) * qp * qp};
  }
};

struct MainB {
  template <class F>
  Sides<typename F::Num> operator()(const F& f, const CheckTask& t) const {
    const RationalParameter x = param_of(t);
    auto s = series::window_sum(f, x.x(), 0, 2, t.p);
    auto qp = series::pochhammer_quotient(f, x, t.p);
    return {s, f(-1, 2) * qp * qp};
  }
};

struct Conjecture {
  template <class F>
  Sides<typename F::Num> operator()(const F& f, const CheckTask& t) const {
    const RationalParameter x = param_of(t);
    auto s = series::window_sum(f, x.x(), 0, 2, t.p);
    auto qp = series::pochhammer_quotient(f, x, t.p);
    auto q2 = qp * qp;
    return {s, f(-1, 2) * q2 - f(static_cast<long>(t.p), 2) * q2 * qp};
  }
};

struct CentralBinomialTransfer {
  template <class F>
  Sides<typename F::Num> operator()(const F& f, const CheckTask& t) const {
    const unsigned long n = static_cast<unsigned long>(half(t.p));
    const long j = *t.a;
    BigInt lhs = binomial(n, j) * binomial(n + static_cast<unsigned long>(j), j);
    if (j % 2) lhs = -lhs;
    const BigInt c = binomial(2 * static_cast<unsigned long>(j), j);
    return {f(ExactRational(lhs)), f(ExactRational(c * c, prime_power(16, static_cast<unsigned long>(j))))};
  }
};

struct Mortenson {
  template <class F>
  Sides<typename F::Num> operator()(const F& f, const CheckTask& t) const {
    auto lhs = series::weighted_window(f, ExactRational(1, 2), 0, t.p - 1, [&](unsigned long) { return f(1); });
    return {lhs, f(legendre_symbol(-1L, t.p))};
  }
};

struct Theorem5First {
  template <class F>
  Sides<typename F::Num> operator()(const F& f, const CheckTask& t) const {
    auto lhs = series::window_sum(f, ExactRational(1, 2), 0, 1, t.p);
    return {lhs, f(-2) * series::harmonic(f, static_cast<unsigned long>(half(t.p)), 1)};
  }
};

struct Theorem5Second {
  template <class F>
  Sides<typename F::Num> operator()(const F& f, const CheckTask& t) const {
    auto lhs = series::window_sum(f, ExactRational(1, 2), 0, 2, t.p);
    auto h = series::harmonic(f, static_cast<unsigned long>(half(t.p)), 1);
    return {lhs, f(-2) * h * h};
  }
};

struct SinglePochhammer {
  template <class F>
  Sides<typename F::Num> operator()(const F& f, const CheckTask& t) const {
    // term_k = (1/2)_k / (1)_k
    auto term = f(1);
    auto lhs = f(0);
    for (long k = 1; k < static_cast<long>(t.p); ++k) {
      term *= f(ExactRational(2 * k - 1, 2 * k));
      lhs += term / f(k);
    }
    return {lhs, -series::harmonic(f, static_cast<unsigned long>(half(t.p)), 1)};
  }
};

struct BetaIdentity {
  Sides<ExactRational> operator()(const ExactField&, const CheckTask& t) const {
    series::CoefficientWalk<ExactField> walk(ExactField{}, ExactRational(1, 2));
    Sides<ExactRational> last{1, 1};
    for (unsigned long k = 0; k < t.p; ++k) {
      walk.advance_to(k);
      const BigInt c = binomial(2 * k, static_cast<long>(k));
      Sides<ExactRational> cur{walk.value(), ExactRational(c * c, prime_power(16, k))};
      if (cur.lhs != cur.rhs) return cur;
      last = std::move(cur);
    }
    return last;
  }
};

struct BetaExpansion {
  template <class F>
  Sides<typename F::Num> operator()(const F& f, const CheckTask& t) const {
    const long p = static_cast<long>(t.p);
    auto lhs = series::coefficient(f, ExactRational(1, 2), t.p);
    auto q2 = fermat_quotient_of(f, ExactRational(2), t.p);
    auto denom = f(4) * (f(1) + f(p) * q2).pow(4);
    const ExactRational correction = ExactRational(1) - ExactRational(4, 3) * q(p).pow(3) * bernoulli_p3(t.p);
    return {lhs, f(correction) / denom};
  }
};

struct Raabe {
  template <class F>
  Sides<typename F::Num> operator()(const F& f, const CheckTask& t) const {
    const ExactRational half_value = bernoulli_polynomial(static_cast<unsigned>(t.p - 3), ExactRational(1, 2));
    return {f(half_value), f(ExactRational(7) * bernoulli_p3(t.p))};
  }
};

struct RaabeExact {
  Sides<ExactRational> operator()(const ExactField&, const CheckTask& t) const {
    // B_n(1/2) = (2^(1-n) - 1) B_n with n = p - 3.
    const ExactRational factor = ExactRational(2).pow(4 - static_cast<long>(t.p)) - ExactRational(1);
    return {bernoulli_polynomial(static_cast<unsigned>(t.p - 3), ExactRational(1, 2)), factor * bernoulli_p3(t.p)};
  }
};

struct SunH1 {
  template <class F>
  Sides<typename F::Num> operator()(const F& f, const CheckTask& t) const {
    const long p = static_cast<long>(t.p);
    auto qt = fermat_quotient_of(f, ExactRational(2), t.p);
    auto pp = f(p);
    auto b = f(bernoulli_p3(t.p));
    auto rhs = f(-2) * qt + pp * qt * qt - f(2, 3) * pp * pp * qt.pow(3) - f(7, 12) * pp * pp * b;
    return {series::harmonic(f, static_cast<unsigned long>(half(t.p)), 1), rhs};
  }
};

struct SunH3 {
  template <class F>
  Sides<typename F::Num> operator()(const F& f, const CheckTask& t) const {
    return {series::harmonic(f, static_cast<unsigned long>(half(t.p)), 3), f(ExactRational(-2) * bernoulli_p3(t.p))};
  }
};

struct HarmonicReflection {
  template <class F>
  Sides<typename F::Num> operator()(const F& f, const CheckTask& t) const {
    const unsigned long j = static_cast<unsigned long>(*t.a);
    return {series::harmonic(f, t.p - 1 - j, 1), series::harmonic(f, j, 1)};
  }
};

struct HarmonicVanishing {
  template <class F>
  Sides<typename F::Num> operator()(const F& f, const CheckTask& t) const {
    return {series::harmonic(f, t.p - 1, 2), f(0)};
  }
};

template <class Check>
CheckDefinition define(std::string name, CheckCategory cat, ParamKind kind, unsigned k, bool bernoulli,
                       std::string summary) {
  CheckDefinition d{std::move(name), cat, kind, k, bernoulli, false, std::move(summary), {}, {}};
  d.exact = [](const ExactField& f, const CheckTask& t) { return Check{}(f, t); };
  d.modular = [](const PAdicField& f, const CheckTask& t) { return Check{}(f, t); };
  return d;
}

template <class Check>
CheckDefinition define_exact(std::string name, ParamKind kind, bool bernoulli, std::string summary) {
  CheckDefinition d{std::move(name), CheckCategory::Theorem, kind, 0, bernoulli, true, std::move(summary), {}, {}};
  d.exact = [](const ExactField& f, const CheckTask& t) { return Check{}(f, t); };
  return d;
}

std::vector<CheckDefinition> build_registry() {
  using K = ParamKind;
  const auto T = CheckCategory::Theorem;
  std::vector<CheckDefinition> r;
  r.push_back(define<PartialFraction>("partial_fraction", T, K::Parameter, 1, false,
                                      "(1)_p/(x)_p == m/[r/p]_m"));
  r.push_back(define<QuotientFermat>("quotient_fermat", T, K::QuotientCase, 2, false,
                                     "Q_p(1/m) == -q_p(1/D), m in {2,3,4,6}"));
  r.push_back(define<Lemma1Harmonic>("lemma1_harmonic", T, K::ParameterShift, 3, true,
                                     "shifted reciprocal sums == -(2/3)(ap)^2 B_{p-3}(x)"));
  r.push_back(define<Lemma1Product>("lemma1_product", T, K::ParameterShift, 3, false,
                                    "(x)_ap(1-x)_ap/(1)_ap^2 factorization"));
  r.push_back(define<Lemma2Shift>("lemma2_shift", T, K::ParameterShift, 2, false,
                                  "S_a(1) == coeff(ap) * sum coeff(k)/(ap+k)"));
  r.push_back(define<MainA>("main_A", T, K::Parameter, 2, false, "S_0(1) == Q + (p/2) Q^2"));
  r.push_back(define<MainB>("main_B", T, K::Parameter, 1, false, "S_0(2) == -Q^2/2"));
  r.push_back(define<Conjecture>("conjecture", CheckCategory::Conjecture, K::Parameter, 2, false,
                                 "S_0(2) == -Q^2/2 - (p/2) Q^3"));
  r.push_back(define<CentralBinomialTransfer>("central_binomial_transfer", T, K::BinomialIndex, 2, false,
                                              "(-1)^k C(n,k)C(n+k,k) == C(2k,k)^2/16^k, n=(p-1)/2"));
  r.push_back(define<Mortenson>("mortenson", T, K::PrimeOnly, 2, false, "sum C(2k,k)^2/16^k == (-1|p)"));
  r.push_back(define<Theorem5First>("theorem5_first", T, K::PrimeOnly, 3, false,
                                    "sum (1/2)_k^2/(1)_k^2/k == -2 H_n(1)"));
  r.push_back(define<Theorem5Second>("theorem5_second", T, K::PrimeOnly, 2, false,
                                     "sum (1/2)_k^2/(1)_k^2/k^2 == -2 H_n(1)^2"));
  r.push_back(define<SinglePochhammer>("single_pochhammer", T, K::PrimeOnly, 3, false,
                                       "sum (1/2)_k/(1)_k/k == -H_n(1)"));
  r.push_back(define_exact<BetaIdentity>("beta_identity", K::PrimeOnly, false,
                                         "(1/2)_k^2/(1)_k^2 = C(2k,k)^2/16^k for k < p (exact)"));
  r.push_back(define<BetaExpansion>("beta_expansion", T, K::PrimeOnly, 4, true,
                                    "beta(1/2) == (1 - (4/3)p^3 B_{p-3}) / (4(1+p q_p(2))^4)"));
  r.push_back(define<Raabe>("raabe", T, K::PrimeOnly, 1, true, "B_{p-3}(1/2) == 7 B_{p-3}"));
  r.push_back(define_exact<RaabeExact>("raabe_exact", K::PrimeOnly, true,
                                       "B_{p-3}(1/2) = (2^{4-p} - 1) B_{p-3} (exact)"));
  r.push_back(define<SunH1>("sun_H1", T, K::PrimeOnly, 3, true,
                            "H_n(1) == -2q + p q^2 - (2/3)p^2 q^3 - (7/12)p^2 B_{p-3}, q = q_p(2)"));
  r.push_back(define<SunH3>("sun_H3", T, K::PrimeOnly, 1, true, "H_n(3) == -2 B_{p-3}"));
  r.push_back(define<HarmonicReflection>("harmonic_reflection", T, K::ReflectionIndex, 1, false,
                                         "H_{p-1-j}(1) == H_j(1)"));
  r.push_back(define<HarmonicVanishing>("harmonic_vanishing", T, K::PrimeOnly, 1, false, "H_{p-1}(2) == 0"));
  return r;
}

std::optional<std::string> domain_problem(const CheckDefinition& def, const CheckTask& t) {
  if (t.p <= 3 || !is_prime(t.p)) return "requires a prime p > 3";
  switch (def.kind) {
    case ParamKind::Parameter:
    case ParamKind::ParameterShift:
    case ParamKind::QuotientCase:
      if (!t.m) throw std::invalid_argument(def.name + ": missing parameter m");
      if (*t.m % static_cast<long>(t.p) == 0) return "p divides m";
      break;
    default:
      break;
  }
  return std::nullopt;
}

void validate(const CheckDefinition& def, const CheckTask& t) {
  const long p = static_cast<long>(t.p);
  switch (def.kind) {
    case ParamKind::Parameter:
    case ParamKind::ParameterShift:
      if (!t.r || !t.m) throw std::invalid_argument(def.name + ": needs a parameter r/m");
      (void)RationalParameter::make(*t.r, *t.m);
      if (def.kind == ParamKind::ParameterShift && (!t.a || *t.a < 1))
        throw std::invalid_argument(def.name + ": needs a shift a >= 1");
      break;
    case ParamKind::QuotientCase:
      if (!t.m) throw std::invalid_argument(def.name + ": needs m");
      quotient_fermat_base(*t.m);
      break;
    case ParamKind::BinomialIndex:
      if (!t.a || *t.a < 0 || *t.a > (p - 1) / 2)
        throw std::invalid_argument(def.name + ": index must satisfy 0 <= k <= (p-1)/2");
      break;
    case ParamKind::ReflectionIndex:
      if (!t.a || *t.a < 1 || *t.a > p - 1) throw std::invalid_argument(def.name + ": index must satisfy 1 <= j <= p-1");
      break;
    case ParamKind::PrimeOnly:
      break;
  }
}

std::optional<BigInt> exact_residue(const ExactRational& v, Prime p, unsigned k) {
  if (!p_valuation(v, p).at_least(0)) return std::nullopt;
  return reduce_mod(v, p, k).value();
}

std::optional<BigInt> modular_residue(const PAdicApprox& v, unsigned k) {
  if (!v.is_zero() && v.valuation() < 0) return std::nullopt;
  return v.residue(k).value();
}

void finish_exact(CheckRecord& rec, Sides<ExactRational> s) {
  const Valuation dv = p_valuation(s.lhs - s.rhs, rec.p);
  rec.diff_valuation = dv.to_string();
  if (rec.k == 0) {
    rec.pass = s.lhs == s.rhs;
  } else {
    rec.lhs_residue = exact_residue(s.lhs, rec.p, rec.k);
    rec.rhs_residue = exact_residue(s.rhs, rec.p, rec.k);
    rec.pass = congruent_mod(s.lhs, s.rhs, rec.p, rec.k);
  }
  rec.lhs = std::move(s.lhs);
  rec.rhs = std::move(s.rhs);
}

void finish_modular(CheckRecord& rec, const Sides<PAdicApprox>& s) {
  const PAdicApprox diff = s.lhs - s.rhs;
  rec.pass = congruent_mod(s.lhs, s.rhs, rec.k);
  rec.lhs_residue = modular_residue(s.lhs, rec.k);
  rec.rhs_residue = modular_residue(s.rhs, rec.k);
  rec.diff_valuation = diff.is_zero() ? ">=" + std::to_string(diff.absolute_precision()) : std::to_string(diff.valuation());
}

}  // namespace

const std::vector<CheckDefinition>& check_registry() {
  static const std::vector<CheckDefinition> registry = build_registry();
  return registry;
}

const CheckDefinition* find_check(const std::string& name) {
  for (const CheckDefinition& d : check_registry())
    if (d.name == name) return &d;
  return nullptr;
}

CheckRecord run_check(const CheckTask& task, EvalPath path) {
  const CheckDefinition* def = find_check(task.check);
  if (!def) throw std::invalid_argument("unknown check '" + task.check + "'");

  CheckRecord rec;
  rec.check = def->name;
  rec.category = def->category;
  rec.p = task.p;
  rec.r = task.r;
  rec.m = task.m;
  rec.a = task.a;
  rec.k = def->exact_only ? 0 : task.k.value_or(def->default_k);
  rec.path = def->exact_only ? EvalPath::Exact : path;

  if (auto why = domain_problem(*def, task)) {
    rec.skipped = true;
    rec.skip_reason = *why;
    return rec;
  }
  validate(*def, task);
  if (rec.k == 0 && !def->exact_only) throw std::invalid_argument(def->name + ": modulus exponent must be positive");

  if (rec.path == EvalPath::Exact) {
    finish_exact(rec, def->exact(ExactField{}, task));
    return rec;
  }
  for (unsigned slack = 3;; slack += 4) {
    try {
      const PAdicField f(task.p, rec.k + slack);
      finish_modular(rec, def->modular(f, task));
      return rec;
    } catch (const PrecisionLoss&) {
      if (slack > 64) throw;
    }
  }
}

std::vector<CheckTask> expand_tasks(const CheckDefinition& def, const std::vector<Prime>& primes, long m_max,
                                    const std::vector<long>& a_values, std::optional<unsigned> k_override) {
  std::vector<CheckTask> out;
  const std::vector<RationalParameter> params = parameters_up_to(m_max);
  for (const Prime p : primes) {
    const long pl = static_cast<long>(p);
    auto base = [&] { return CheckTask{def.name, p, {}, {}, {}, k_override}; };
    switch (def.kind) {
      case ParamKind::PrimeOnly:
        out.push_back(base());
        break;
      case ParamKind::Parameter:
        for (const RationalParameter& x : params) {
          if (!x.compatible_with(p)) continue;
          CheckTask t = base();
          t.r = x.r();
          t.m = x.m();
          out.push_back(t);
        }
        break;
      case ParamKind::ParameterShift:
        for (const RationalParameter& x : params) {
          if (!x.compatible_with(p)) continue;
          for (long a : a_values) {
            CheckTask t = base();
            t.r = x.r();
            t.m = x.m();
            t.a = a;
            out.push_back(t);
          }
        }
        break;
      case ParamKind::QuotientCase:
        for (long m : {2L, 3L, 4L, 6L}) {
          if (m % pl == 0) continue;
          CheckTask t = base();
          t.r = 1;
          t.m = m;
          out.push_back(t);
        }
        break;
      case ParamKind::BinomialIndex:
        for (long j = 0; j <= (pl - 1) / 2; ++j) {
          CheckTask t = base();
          t.a = j;
          out.push_back(t);
        }
        break;
      case ParamKind::ReflectionIndex:
        for (long j = 1; j <= pl - 1; ++j) {
          CheckTask t = base();
          t.a = j;
          out.push_back(t);
        }
        break;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

CheckRecord run_named(const char* name, Prime p, std::optional<long> r, std::optional<long> m, std::optional<long> a,
                      EvalPath path) {
  return run_check(CheckTask{name, p, r, m, a, std::nullopt}, path);
}

}  // namespace

CheckRecord check_partial_fraction(const RationalParameter& x, Prime p, EvalPath path) {
  return run_named("partial_fraction", p, x.r(), x.m(), {}, path);
}
CheckRecord check_quotient_fermat(long case_m, Prime p, EvalPath path) {
  return run_named("quotient_fermat", p, 1, case_m, {}, path);
}
CheckRecord check_lemma1_harmonic(const RationalParameter& x, Prime p, long a, EvalPath path) {
  return run_named("lemma1_harmonic", p, x.r(), x.m(), a, path);
}
CheckRecord check_lemma1_product(const RationalParameter& x, Prime p, long a, EvalPath path) {
  return run_named("lemma1_product", p, x.r(), x.m(), a, path);
}
CheckRecord check_lemma2_shift(const RationalParameter& x, Prime p, long a, EvalPath path) {
  return run_named("lemma2_shift", p, x.r(), x.m(), a, path);
}
CheckRecord check_main_A(const RationalParameter& x, Prime p, EvalPath path) {
  return run_named("main_A", p, x.r(), x.m(), {}, path);
}
CheckRecord check_main_B(const RationalParameter& x, Prime p, EvalPath path) {
  return run_named("main_B", p, x.r(), x.m(), {}, path);
}
CheckRecord check_conjecture(const RationalParameter& x, Prime p, EvalPath path) {
  return run_named("conjecture", p, x.r(), x.m(), {}, path);
}
CheckRecord check_central_binomial_transfer(Prime p, long k, EvalPath path) {
  return run_named("central_binomial_transfer", p, {}, {}, k, path);
}
CheckRecord check_mortenson(Prime p, EvalPath path) { return run_named("mortenson", p, {}, {}, {}, path); }
CheckRecord check_theorem5_first(Prime p, EvalPath path) { return run_named("theorem5_first", p, {}, {}, {}, path); }
CheckRecord check_theorem5_second(Prime p, EvalPath path) { return run_named("theorem5_second", p, {}, {}, {}, path); }
CheckRecord check_single_pochhammer(Prime p, EvalPath path) {
  return run_named("single_pochhammer", p, {}, {}, {}, path);
}
CheckRecord check_beta_identity(Prime p) { return run_named("beta_identity", p, {}, {}, {}, EvalPath::Exact); }
CheckRecord check_beta_expansion(Prime p, EvalPath path) { return run_named("beta_expansion", p, {}, {}, {}, path); }
CheckRecord check_raabe(Prime p, EvalPath path) { return run_named("raabe", p, {}, {}, {}, path); }
CheckRecord check_raabe_exact(Prime p) { return run_named("raabe_exact", p, {}, {}, {}, EvalPath::Exact); }
CheckRecord check_sun_H1(Prime p, EvalPath path) { return run_named("sun_H1", p, {}, {}, {}, path); }
CheckRecord check_sun_H3(Prime p, EvalPath path) { return run_named("sun_H3", p, {}, {}, {}, path); }
CheckRecord check_harmonic_reflection(Prime p, long j, EvalPath path) {
  return run_named("harmonic_reflection", p, {}, {}, j, path);
}
CheckRecord check_harmonic_vanishing(Prime p, EvalPath path) {
  return run_named("harmonic_vanishing", p, {}, {}, {}, path);
}

}  // namespace supercong
