#pragma once

#include "sdcalc/polynomial.hpp"
#include "sdcalc/rational.hpp"

#include <vector>

namespace sdcalc {

/// Formal power series in t truncated at a fixed order N: exactly the
/// coefficients c_0..c_N are kept, everything above is discarded. All
/// arithmetic is exact and closed at order N. Binary operations require both
/// operands to share the truncation order.
class TruncatedSeries {
public:
    explicit TruncatedSeries(long order);
    TruncatedSeries(long order, std::vector<Rational> coefficients);

    long order() const { return order_; }

    /// Coefficient of t^n; throws std::domain_error when n > order.
    const Rational& coefficient(long n) const;
    const std::vector<Rational>& coefficients() const { return coefficients_; }

    TruncatedSeries& operator+=(const TruncatedSeries& o);
    TruncatedSeries& operator-=(const TruncatedSeries& o);

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }

    /// Cauchy product, truncated at the shared order.
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

    /// Multiplicative inverse; requires c_0 != 0 (std::domain_error otherwise).
    TruncatedSeries inverse() const;

    /// Scalar multiple s * f.
    TruncatedSeries scaled(const Rational& s) const;

    /// Argument substitution f(x t): coefficient c_n becomes c_n x^n.
    TruncatedSeries with_scaled_argument(const Rational& x) const;

    bool operator==(const TruncatedSeries&) const = default;

private:
    long order_ = 0;
    std::vector<Rational> coefficients_;  // always order_ + 1 entries
};

/// S_d-exponential series: coefficients 1/sd_factorial(d, n) for n = 0..order.
TruncatedSeries exp_d_series(int d, long order);

/// Degree-m partial sum of the S_d-exponential, as a polynomial in x.
Polynomial exp_d_partial_sum(int d, long m);

/// S_d-hypergeometric series: coefficient of t^n is
///   prod_j (a_j)_{d,n} / (prod_i (b_i)_{d,n} * sd_factorial(d,n)).
/// Parameters are positive integers; a non-positive lower parameter is a
/// domain error (zero factors would appear in the denominators).
TruncatedSeries sigma_series(int d, const std::vector<long>& upper,
                             const std::vector<long>& lower, long order);

/// 1-sigma-1(1; m+1; t), computed two independent ways — directly via
/// sigma_series, and as sd_factorial(d,m) t^{-m} (exp_d - T_{d,m-1}) by
/// coefficient shift — asserted equal (std::logic_error on disagreement).
/// Requires m >= 1.
TruncatedSeries one_sigma_one_tail(int d, long m, long order);

/// Checks 1/sd_factorial(d,n) == (d!)^n / (n! (2)_n (3)_n ... (d)_n) for
/// n = 0..order, i.e. exp_d(x) = 0F_{d-1}(; 2..d; d! x) coefficientwise.
bool exp_hypergeometric_coefficient_check(int d, long order);

}  // namespace sdcalc
