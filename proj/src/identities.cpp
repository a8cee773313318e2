#include "supercong/identities.hpp"

#include "supercong/special_values.hpp"

namespace supercong {

namespace {

ExactRational q(unsigned long n) { return ExactRational(static_cast<long>(n)); }

void require_unit_interval(const ExactRational& x) {
  if (!(x > ExactRational(0) && x < ExactRational(1))) throw OutOfDomain("x must lie strictly between 0 and 1");
}

// (1)_n^2 / ((x)_n (1-x)_n)
ExactRational inverse_coefficient(const ExactRational& x, unsigned long n) {
  return ExactRational(1) / hypergeometric_coefficient(x, n);
}

}  // namespace

ExactRational wz_F(const WZPoint& pt) {
  if (pt.k >= pt.n) throw OutOfDomain("wz_F needs k < n");
  require_unit_interval(pt.x);
  return inverse_coefficient(pt.x, pt.n) * hypergeometric_coefficient(pt.x, pt.k) / q(pt.n - pt.k);
}

ExactRational wz_G(const WZPoint& pt) {
  if (pt.k > pt.n) throw OutOfDomain("wz_G needs k <= n");
  require_unit_interval(pt.x);
  const ExactRational n = q(pt.n);
  const ExactRational k = q(pt.k);
  const ExactRational r_cancelled = -(k * k) / ((n + 1 - k) * (pt.x + n) * (ExactRational(1) - pt.x + n));
  return r_cancelled * inverse_coefficient(pt.x, pt.n) * hypergeometric_coefficient(pt.x, pt.k);
}

bool check_wz_pair(const WZPoint& pt) {
  if (pt.k >= pt.n) throw OutOfDomain("check_wz_pair needs k < n");
  const ExactRational lhs = wz_F({pt.n + 1, pt.k, pt.x}) - wz_F(pt);
  const ExactRational rhs = wz_G({pt.n, pt.k + 1, pt.x}) - wz_G(pt);
  return lhs == rhs;
}

bool check_wz_pair_as_rational_function(unsigned long n, unsigned long k) {
  const unsigned long samples = 4 * n + 5;
  for (unsigned long j = 1; j <= samples; ++j)
    if (!check_wz_pair({n, k, ExactRational(static_cast<long>(j), static_cast<long>(samples + 1))})) return false;
  return true;
}

bool check_theorem1(const ExactRational& x, unsigned long n) {
  require_unit_interval(x);
  ExactRational lhs;
  ExactRational reciprocal_sum;
  const ExactRational y = ExactRational(1) - x;
  for (unsigned long k = 0; k < n; ++k) {
    lhs += hypergeometric_coefficient(x, k) / q(n - k);
    reciprocal_sum += ExactRational(1) / (x + q(k)) + ExactRational(1) / (y + q(k));
  }
  return lhs == hypergeometric_coefficient(x, n) * reciprocal_sum;
}

bool check_telescoping(const ExactRational& x, unsigned long n) {
  require_unit_interval(x);
  ExactRational lhs;
  ExactRational rhs;
  for (unsigned long k = 0; k < n; ++k) {
    lhs += wz_F({n, k, x}) + wz_G({k, 0, x});
    rhs += wz_F({k + 1, k, x}) + wz_G({k, k, x});
  }
  return lhs == rhs;
}

bool check_prodinger(unsigned long n, const ExactRational& z) {
  if (z.is_integer() && z.sign() <= 0 && -z <= q(n)) throw OutOfDomain("z is a pole of the identity");
  ExactRational lhs;
  for (unsigned long k = 1; k <= n; ++k) {
    const ExactRational term = ExactRational(BigInt(binomial(n, static_cast<long>(k)) * binomial(n + k, static_cast<long>(k)))) / (z + q(k));
    lhs += (k % 2 ? -term : term);
  }
  const ExactRational one(1);
  const ExactRational rhs = (pochhammer(one - z, n) / pochhammer(one + z, n) - one) / z;
  return lhs == rhs;
}

bool check_alternating_binomial(unsigned long n) {
  BigInt acc = 0;
  for (unsigned long k = 0; k <= n; ++k) {
    const BigInt term = binomial(n, static_cast<long>(k)) * binomial(n + k, static_cast<long>(k));
    acc += (k % 2 ? -term : term);
  }
  return acc == (n % 2 ? -1 : 1);
}

bool check_theorem4(unsigned long n, unsigned r, MhsTable& table) {
  ExactRational lhs;
  for (unsigned long k = 1; k <= n; ++k) {
    const ExactRational term = ExactRational(BigInt(binomial(n, static_cast<long>(k)) * binomial(n + k, static_cast<long>(k)))) /
                               q(k).pow(r);
    lhs += (k % 2 ? -term : term);
  }
  ExactRational rhs;
  BigInt two_d = 1;
  for (unsigned d = 1; d <= r; ++d) {
    two_d *= 2;
    ExactRational inner;
    for (const Composition& s : compositions_of_weight(r, d)) inner += table.value(n, s);
    rhs -= ExactRational(two_d) * inner;
  }
  return lhs == rhs;
}

bool check_theorem4(unsigned long n, unsigned r) {
  MhsTable table(n);
  return check_theorem4(n, r, table);
}

bool stuffle_product(const Composition& a, const Composition& b, unsigned long n) {
  const unsigned s = a.parts().front();
  const unsigned t = b.parts().front();
  const ExactRational lhs = harmonic_sum(n, s) * harmonic_sum(n, t);
  const ExactRational rhs = multiple_harmonic_sum(n, Composition({s, t})) +
                            multiple_harmonic_sum(n, Composition({t, s})) + harmonic_sum(n, s + t);
  return lhs == rhs;
}

bool check_weight2_expansion(unsigned long n) {
  const ExactRational h1 = harmonic_sum(n, 1);
  const ExactRational lhs = ExactRational(-2) * harmonic_sum(n, 2) - ExactRational(4) * multiple_harmonic_sum(n, Composition({1, 1}));
  return lhs == ExactRational(-2) * h1 * h1;
}

bool check_weight3_expansion(unsigned long n) {
  const ExactRational h1 = harmonic_sum(n, 1);
  const ExactRational h3 = harmonic_sum(n, 3);
  const ExactRational lhs = ExactRational(-2) * h3 - ExactRational(4) * multiple_harmonic_sum(n, Composition({2, 1})) -
                            ExactRational(4) * multiple_harmonic_sum(n, Composition({1, 2})) -
                            ExactRational(8) * multiple_harmonic_sum(n, Composition({1, 1, 1}));
  const ExactRational rhs = ExactRational(-4, 3) * h1.pow(3) - ExactRational(2, 3) * h3;
  return lhs == rhs;
}

bool check_pochhammer_generating(unsigned long n, const ExactRational& z) {
  MhsTable table(n);
  std::vector<ExactRational> e(n + 1);
  e[0] = 1;
  for (unsigned long d = 1; d <= n; ++d) e[d] = table.value(n, Composition(std::vector<unsigned>(d, 1)));
  ExactRational poly;
  ExactRational zpow(1);
  for (unsigned long d = 0; d <= n; ++d) {
    poly += e[d] * zpow;
    zpow *= z;
  }
  BigInt factorial;
  mpz_fac_ui(factorial.get_mpz_t(), n);
  return pochhammer(ExactRational(1) + z, n) == ExactRational(factorial) * poly;
}

}  // namespace supercong
