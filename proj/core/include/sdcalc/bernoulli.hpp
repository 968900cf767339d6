#pragma once

#include "sdcalc/polynomial.hpp"
#include "sdcalc/rational.hpp"

#include <vector>

namespace sdcalc {

enum class BernoulliMethod { series_inversion, composition_sum };

/// Exact table B_{d,0}(m)..B_{d,N}(m) of S_d-hypergeometric Bernoulli
/// numbers; m = 1 is the plain S_d-Bernoulli case.
struct BernoulliTable {
    int d = 1;
    long m = 1;
    BernoulliMethod method = BernoulliMethod::series_inversion;
    std::vector<Rational> values;

    const Rational& value(long n) const { return values.at(static_cast<std::size_t>(n)); }
    long count() const { return static_cast<long>(values.size()); }
};

/// The polynomials B_{d,0}(m;x)..B_{d,N}(m;x). Each B_{d,n}(m;x) is monic of
/// degree n with constant term B_{d,n}(m).
struct BernoulliPolynomialFamily {
    int d = 1;
    long m = 1;
    std::vector<Polynomial> polynomials;

    const Polynomial& at(long n) const { return polynomials.at(static_cast<std::size_t>(n)); }
    long count() const { return static_cast<long>(polynomials.size()); }
};

/// Largest n accepted by the composition-sum method (2^(n-1) compositions);
/// above this the series method is the only route.
inline constexpr long kCompositionSumCap = 18;

/// B_{d,n}(m) for n = 0..n_max via exact inversion of the generating series
/// 1-sigma-1(1; m+1; t): B_{d,n}(m) = sd_factorial(d,n) [t^n] inverse.
BernoulliTable bernoulli_numbers_series(int d, long m, long n_max);

/// B_{d,n}(m) by the explicit composition sum
///   sum_{i=1}^{n} sum_{k_1+...+k_i = n, k_j >= 1} (-1)^i sd_factorial(d,n)
///       / ((m+1)_{d,k_1} ... (m+1)_{d,k_i}).
/// Throws std::length_error above kCompositionSumCap.
Rational bernoulli_number_composition(int d, long m, long n);

/// Full table via the composition sum (independent of the series route).
BernoulliTable bernoulli_numbers_composition(int d, long m, long n_max);

/// B_{d,n}(m;x) = sum_k hoggatt(d,n,k) B_{d,k}(m) x^(n-k), built from a
/// series-inversion table.
BernoulliPolynomialFamily bernoulli_polynomials(int d, long m, long n_max);

}  // namespace sdcalc
