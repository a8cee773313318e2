#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "supercong/exact_arith.hpp"
#include "supercong/numeric.hpp"
#include "supercong/sums.hpp"

namespace supercong {

enum class CheckCategory { Theorem, Conjecture };
enum class EvalPath { Exact, Modular };

std::string to_string(CheckCategory c);
std::string to_string(EvalPath p);

/// How a check is indexed beyond the prime.
enum class ParamKind {
  PrimeOnly,        // (p)
  Parameter,        // (p, r/m)
  ParameterShift,   // (p, r/m, a)
  QuotientCase,     // (p, 1/m) with m in {2, 3, 4, 6}
  BinomialIndex,    // (p, a) with 0 <= a <= (p-1)/2
  ReflectionIndex,  // (p, a) with 1 <= a <= p-1
};

/// One verification outcome.
///
/// k is the modulus exponent; k = 0 marks an exact-equality check.
/// pass == congruent_mod(lhs, rhs, p, k) for k > 0 and lhs == rhs for k = 0.
struct CheckRecord {
  std::string check;
  CheckCategory category = CheckCategory::Theorem;
  Prime p = 0;
  std::optional<long> r, m, a;
  unsigned k = 0;
  EvalPath path = EvalPath::Exact;
  std::optional<ExactRational> lhs, rhs;  // exact path only
  std::optional<BigInt> lhs_residue, rhs_residue;  // absent when a side is not p-integral
  std::string diff_valuation;  // "inf", "<n>", or ">=<n>" on the modular path
  bool pass = false;
  bool skipped = false;
  std::string skip_reason;
  bool cross_checked = false;  // both paths evaluated (campaigns, small p)
  bool discrepancy = false;    // the two paths disagreed

  BigInt modulus() const { return prime_power(p, k); }
};

/// Sort key used by reports: (check, p, r, m, a).
bool record_less(const CheckRecord& x, const CheckRecord& y);

/// Residues and pass flag agree (paths may differ).
bool same_outcome(const CheckRecord& x, const CheckRecord& y);

/// A single (check, p, params) unit of work.
struct CheckTask {
  std::string check;
  Prime p = 0;
  std::optional<long> r, m, a;
  std::optional<unsigned> k;  // overrides the check's default exponent
};

template <class Num>
struct Sides {
  Num lhs;
  Num rhs;
};

struct CheckDefinition {
  std::string name;
  CheckCategory category;
  ParamKind kind;
  unsigned default_k;
  bool needs_bernoulli;  // uses B_{p-3}
  bool exact_only;       // exact equality; no modular path
  std::string summary;
  std::function<Sides<ExactRational>(const ExactField&, const CheckTask&)> exact;
  std::function<Sides<PAdicApprox>(const PAdicField&, const CheckTask&)> modular;

  /// Default upper prime bound for campaigns (B_{p-3} is O(p^2) to compute).
  Prime default_prime_cap() const { return needs_bernoulli ? 500 : 2000; }
};

/// All checks, in a fixed order.
const std::vector<CheckDefinition>& check_registry();
/// nullptr for an unknown name.
const CheckDefinition* find_check(const std::string& name);

/// Evaluates one task. Prime <= 3 or a denominator clash produce a skipped
/// record. Exact-only checks ignore the requested path.
CheckRecord run_check(const CheckTask& task, EvalPath path = EvalPath::Exact);

/// Tasks for a check over the given primes.
std::vector<CheckTask> expand_tasks(const CheckDefinition& def, const std::vector<Prime>& primes, long m_max,
                                    const std::vector<long>& a_values, std::optional<unsigned> k_override = {});

// Named entry points.

CheckRecord check_partial_fraction(const RationalParameter& x, Prime p, EvalPath path = EvalPath::Exact);
/// case_m in {2, 3, 4, 6}: Q_p(1/m) == -q_p(1/D) with D = 16, 27, 64, 432.
CheckRecord check_quotient_fermat(long case_m, Prime p, EvalPath path = EvalPath::Exact);
CheckRecord check_lemma1_harmonic(const RationalParameter& x, Prime p, long a, EvalPath path = EvalPath::Exact);
CheckRecord check_lemma1_product(const RationalParameter& x, Prime p, long a, EvalPath path = EvalPath::Exact);
CheckRecord check_lemma2_shift(const RationalParameter& x, Prime p, long a, EvalPath path = EvalPath::Exact);
CheckRecord check_main_A(const RationalParameter& x, Prime p, EvalPath path = EvalPath::Exact);
CheckRecord check_main_B(const RationalParameter& x, Prime p, EvalPath path = EvalPath::Exact);
CheckRecord check_conjecture(const RationalParameter& x, Prime p, EvalPath path = EvalPath::Exact);
CheckRecord check_central_binomial_transfer(Prime p, long k, EvalPath path = EvalPath::Exact);
CheckRecord check_mortenson(Prime p, EvalPath path = EvalPath::Exact);
CheckRecord check_theorem5_first(Prime p, EvalPath path = EvalPath::Exact);
CheckRecord check_theorem5_second(Prime p, EvalPath path = EvalPath::Exact);
CheckRecord check_single_pochhammer(Prime p, EvalPath path = EvalPath::Exact);
CheckRecord check_beta_identity(Prime p);
CheckRecord check_beta_expansion(Prime p, EvalPath path = EvalPath::Exact);
CheckRecord check_raabe(Prime p, EvalPath path = EvalPath::Exact);
CheckRecord check_raabe_exact(Prime p);
CheckRecord check_sun_H1(Prime p, EvalPath path = EvalPath::Exact);
CheckRecord check_sun_H3(Prime p, EvalPath path = EvalPath::Exact);
CheckRecord check_harmonic_reflection(Prime p, long j, EvalPath path = EvalPath::Exact);
CheckRecord check_harmonic_vanishing(Prime p, EvalPath path = EvalPath::Exact);

}  // namespace supercong
