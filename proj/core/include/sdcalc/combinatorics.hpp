#pragma once

#include "sdcalc/rational.hpp"

namespace sdcalc {

/// C(n, k); 0 when k < 0 or k > n. Requires n >= 0.
Integer binomial(long n, long k);

Integer factorial(long n);

/// Rising factorial a(a+1)...(a+n-1); 1 when n == 0.
Integer rising_factorial(const Integer& a, long n);

/// n-th simplicial d-polytopic number C(n+d-1, d). Requires d >= 1, n >= 0.
/// d = 1 gives the naturals, d = 2 the triangular numbers, d = 3 the
/// tetrahedral numbers, and so on.
Integer sd_number(int d, long n);

/// Same value through the Vandermonde binomial sum
/// sum_{k=0}^{d-1} C(d-1,k) C(n,k+1).
Integer sd_number_via_binomial_sum(int d, long n);

/// Same value through unsigned Stirling numbers of the first kind:
/// (1/d!) sum_{k=0}^{d} s1(d,k) n^k. The division is exact because the sum
/// equals the rising factorial n(n+1)...(n+d-1); an inexact division means
/// the Stirling convention drifted and raises std::logic_error.
Integer sd_number_via_stirling(int d, long n);

/// d-simplitorial: product of sd_number(d, k) for k = 1..n; 1 when n == 0.
Integer sd_factorial(int d, long n);

/// d-Hoggatt binomial sd_factorial(d,n) / (sd_factorial(d,k) sd_factorial(d,n-k))
/// as an exact rational. Integrality is observed in practice, not assumed.
/// Requires 0 <= k <= n.
Rational hoggatt_binomial(int d, long n, long k);

/// S_d-Pochhammer symbol: product of sd_number(d, a+j) for j = 0..n-1.
/// Requires an integer base a >= 1; (1)_{d,n} equals sd_factorial(d, n).
Integer sd_pochhammer(int d, long a, long n);

/// Unsigned Stirling numbers of the first kind; 0 outside the triangle.
Integer stirling_first_unsigned(long n, long k);

/// Stirling numbers of the second kind; 0 outside the triangle.
Integer stirling_second(long n, long k);

/// Multiplier f(d; n, k) in the Pascal-style recurrence for Hoggatt binomials:
///   hoggatt(d, n+1, k) = f(d;n,k) * hoggatt(d, n, k) + hoggatt(d, n, k-1).
/// Requires d >= 2 and 1 <= k <= n.
Rational pascal_factor(int d, long n, long k);

}  // namespace sdcalc
