#pragma once

#include "supercong/exact_arith.hpp"
#include "supercong/sums.hpp"

namespace supercong {

/// Argument outside an identity's domain (pole, k >= n, ...).
struct OutOfDomain : std::domain_error {
  using std::domain_error::domain_error;
};

/// Evaluation point (n, k, x) of the WZ pair behind the 1/(n-k) identity.
struct WZPoint {
  unsigned long n;
  unsigned long k;
  ExactRational x;  // 0 < x < 1
};

/// F(n,k) = (1)_n^2 / ((x)_n (1-x)_n) * (x)_k (1-x)_k / (1)_k^2 / (n-k); needs k < n.
ExactRational wz_F(const WZPoint& pt);

/// G(n,k) = R(n,k) F(n,k) with R(n,k) = -k^2 (n-k) / ((n+1-k)(x+n)(1-x+n)).
/// Evaluated with the (n-k) factor cancelled, so k = n is allowed (and n = 0).
ExactRational wz_G(const WZPoint& pt);

/// F(n+1,k) - F(n,k) == G(n,k+1) - G(n,k) exactly; needs k < n.
bool check_wz_pair(const WZPoint& pt);

/// For fixed (n, k) both sides of the WZ equation are rational functions of x
/// of degree at most 4n + 4 in numerator and denominator. Agreement at
/// 4n + 5 distinct points of (0,1) therefore proves the identity for (n, k).
bool check_wz_pair_as_rational_function(unsigned long n, unsigned long k);

/// sum_{k<n} (x)_k (1-x)_k / (1)_k^2 / (n-k)
///   == (x)_n (1-x)_n / (1)_n^2 * sum_{k<n} (1/(x+k) + 1/(1-x+k)).
bool check_theorem1(const ExactRational& x, unsigned long n);

/// sum_{k<n} F(n,k) + sum_{j<n} G(j,0) == sum_{k<n} (F(k+1,k) + G(k,k)).
bool check_telescoping(const ExactRational& x, unsigned long n);

/// sum_{k=1}^n (-1)^k / (z+k) C(n,k) C(n+k,k) == ((1-z)_n / (1+z)_n - 1) / z.
/// Throws OutOfDomain when z is in {0, -1, ..., -n}.
bool check_prodinger(unsigned long n, const ExactRational& z);

/// sum_{k=0}^n (-1)^k C(n,k) C(n+k,k) == (-1)^n.
bool check_alternating_binomial(unsigned long n);

/// sum_{k=1}^n (-1)^k / k^r C(n,k) C(n+k,k) == -sum_d 2^d sum_{|s|=r, depth d} H_n(s).
bool check_theorem4(unsigned long n, unsigned r);
/// Same, with multiple harmonic sums served from a shared table (n <= table.n_max()).
bool check_theorem4(unsigned long n, unsigned r, MhsTable& table);

/// Depth-1 stuffle law H_n(a) H_n(b) == H_n(a,b) + H_n(b,a) + H_n(a+b).
/// Only the first part of each composition is used.
bool stuffle_product(const Composition& a, const Composition& b, unsigned long n);

/// -2H_n(2) - 4H_n(1,1) == -2 H_n(1)^2.
bool check_weight2_expansion(unsigned long n);
/// -2H_n(3) - 4H_n(2,1) - 4H_n(1,2) - 8H_n(1,1,1) == -(4/3) H_n(1)^3 - (2/3) H_n(3).
bool check_weight3_expansion(unsigned long n);

/// (1+z)_n == n! (1 + sum_{d=1}^n H_n({1}^d) z^d).
bool check_pochhammer_generating(unsigned long n, const ExactRational& z);

}  // namespace supercong
