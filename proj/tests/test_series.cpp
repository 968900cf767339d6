#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sdcalc/combinatorics.hpp"
#include "sdcalc/polynomial.hpp"
#include "sdcalc/series.hpp"

#include <cstdint>
#include <stdexcept>

using namespace sdcalc;

namespace {

struct Lcg {
    std::uint64_t state = 0x9e3779b97f4a7c15ull;
    std::uint64_t next() {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return state >> 11;
    }
    long below(long bound) { return static_cast<long>(next() % static_cast<std::uint64_t>(bound)); }
    Rational rational() { return Rational(below(19) - 9, below(9) + 1); }
};

TruncatedSeries series_of(std::vector<long> values, long order) {
    std::vector<Rational> coeffs;
    for (long v : values) coeffs.emplace_back(v);
    return TruncatedSeries(order, std::move(coeffs));
}

}  // namespace

TEST_CASE("series arithmetic stays closed at the truncation order") {
    const TruncatedSeries one_plus_t = series_of({1, 1}, 3);
    const TruncatedSeries geometric = one_plus_t.inverse();
    CHECK(geometric == TruncatedSeries(3, {Rational(1), Rational(-1), Rational(1), Rational(-1)}));

    const TruncatedSeries product = series_of({1, 1}, 2) * series_of({1, -1}, 2);
    CHECK(product == TruncatedSeries(2, {Rational(1), Rational(0), Rational(-1)}));

    CHECK_THROWS_AS(series_of({1}, 2) + series_of({1}, 3), std::domain_error);
    CHECK_THROWS_AS(series_of({0, 1}, 3).inverse(), std::domain_error);
    CHECK_THROWS_AS(series_of({1}, 2).coefficient(3), std::domain_error);
    CHECK_THROWS_AS(TruncatedSeries(-1), std::domain_error);
}

TEST_CASE("inverse round-trips on random unit series") {
    Lcg rng;
    TruncatedSeries unit(10);
    unit += TruncatedSeries(10, {Rational(1)});
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Rational> coeffs(11);
        coeffs[0] = Rational(rng.below(9) + 1, rng.below(9) + 1);
        for (std::size_t i = 1; i < coeffs.size(); ++i) coeffs[i] = rng.rational();
        const TruncatedSeries f(10, std::move(coeffs));
        CHECK(f * f.inverse() == unit);
    }
}

TEST_CASE("exp_d series coefficients are reciprocal simplitorials") {
    CHECK(exp_d_series(2, 3) ==
          TruncatedSeries(3, {Rational(1), Rational(1), Rational(1, 3), Rational(1, 18)}));
    CHECK(exp_d_series(3, 3) ==
          TruncatedSeries(3, {Rational(1), Rational(1), Rational(1, 4), Rational(1, 40)}));
    for (long n = 0; n <= 12; ++n) {
        CHECK(exp_d_series(1, 12).coefficient(n) == Rational(Integer(1), factorial(n)));
    }
    for (int d = 1; d <= 6; ++d) {
        for (long n = 0; n <= 20; ++n) {
            CHECK(exp_d_series(d, 20).coefficient(n) == Rational(Integer(1), sd_factorial(d, n)));
        }
    }
}

TEST_CASE("partial sums of exp_d") {
    CHECK(exp_d_partial_sum(2, 0) == Polynomial::constant(Rational(1)));
    CHECK(exp_d_partial_sum(2, 2) == Polynomial({Rational(1), Rational(1), Rational(1, 3)}));
    CHECK(exp_d_partial_sum(5, 1) == Polynomial({Rational(1), Rational(1)}));
    CHECK(exp_d_partial_sum(2, 3).evaluate(Rational(1)) == Rational(43, 18));
    CHECK(exp_d_partial_sum(3, 2).evaluate(Rational(1, 2)) == Rational(25, 16));
}

TEST_CASE("sigma series") {
    // no parameters: exp_d itself
    for (int d = 1; d <= 5; ++d) {
        CHECK(sigma_series(d, {}, {}, 15) == exp_d_series(d, 15));
    }
    // d = 1 collapses to ordinary hypergeometric coefficients
    for (long a = 1; a <= 4; ++a) {
        for (long b = 1; b <= 4; ++b) {
            const TruncatedSeries sigma = sigma_series(1, {a}, {b}, 10);
            for (long n = 0; n <= 10; ++n) {
                const Rational f(rising_factorial(Integer(a), n),
                                 rising_factorial(Integer(b), n) * factorial(n));
                CHECK(sigma.coefficient(n) == f);
            }
        }
    }
    CHECK(sigma_series(2, {1}, {3}, 3) ==
          TruncatedSeries(3, {Rational(1), Rational(1, 6), Rational(1, 60), Rational(1, 900)}));
    CHECK_THROWS_AS(sigma_series(2, {1}, {0}, 3), std::domain_error);
    CHECK_THROWS_AS(sigma_series(2, {1}, {-2}, 3), std::domain_error);
}

TEST_CASE("one_sigma_one_tail agrees with the shifted exponential") {
    CHECK(one_sigma_one_tail(2, 1, 3) ==
          TruncatedSeries(3, {Rational(1), Rational(1, 3), Rational(1, 18), Rational(1, 180)}));
    CHECK(one_sigma_one_tail(2, 2, 2) ==
          TruncatedSeries(2, {Rational(1), Rational(1, 6), Rational(1, 60)}));
    for (int d = 1; d <= 5; ++d) {
        for (long m = 1; m <= 6; ++m) {
            const TruncatedSeries tail = one_sigma_one_tail(d, m, 30);
            CHECK(tail.coefficient(0) == Rational(1));
            // coefficient n is 1/(m+1)_{d,n}
            for (long n = 0; n <= 30; ++n) {
                CHECK(tail.coefficient(n) == Rational(Integer(1), sd_pochhammer(d, m + 1, n)));
            }
        }
    }
    CHECK_THROWS_AS(one_sigma_one_tail(2, 0, 5), std::domain_error);
}

TEST_CASE("exp_d as a shifted ordinary hypergeometric series") {
    CHECK(exp_hypergeometric_coefficient_check(1, 20));
    CHECK(exp_hypergeometric_coefficient_check(2, 20));
    CHECK(exp_hypergeometric_coefficient_check(5, 20));
    for (int d = 1; d <= 8; ++d) {
        CHECK(exp_hypergeometric_coefficient_check(d, 25));
    }
}

TEST_CASE("partial sums are eigenfunctions of the S_d-derivative, one degree down") {
    for (int d = 1; d <= 6; ++d) {
        for (long n = 1; n <= 20; ++n) {
            CHECK(sd_derivative_operator_form(exp_d_partial_sum(d, n), d) ==
                  exp_d_partial_sum(d, n - 1));
        }
    }
}

TEST_CASE("argument scaling and scalar scaling") {
    const TruncatedSeries f = exp_d_series(2, 5);
    const Rational x(2, 3);
    const TruncatedSeries scaled = f.with_scaled_argument(x);
    Rational xpow(1);
    for (long n = 0; n <= 5; ++n) {
        CHECK(scaled.coefficient(n) == f.coefficient(n) * xpow);
        xpow *= x;
    }
    const TruncatedSeries tripled = f.scaled(Rational(3));
    for (long n = 0; n <= 5; ++n) {
        CHECK(tripled.coefficient(n) == Rational(3) * f.coefficient(n));
    }
}
