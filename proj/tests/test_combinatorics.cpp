#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sdcalc/combinatorics.hpp"

#include <functional>
#include <stdexcept>
#include <vector>

using namespace sdcalc;

namespace {

// independent oracle: expand x(x+1)...(x+n-1) and read off coefficients
std::vector<Integer> rising_factorial_coefficients(long n) {
    std::vector<Integer> coeffs{Integer(1)};
    for (long j = 0; j < n; ++j) {
        std::vector<Integer> next(coeffs.size() + 1, Integer(0));
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            next[i] += coeffs[i] * j;   // multiply by (x + j)
            next[i + 1] += coeffs[i];
        }
        coeffs = std::move(next);
    }
    return coeffs;
}

// independent oracle: count partitions of {1..n} into k nonempty blocks by
// enumerating restricted-growth strings (block of element i is at most one
// past the largest block used so far)
long count_partitions(long n, long k) {
    long count = 0;
    const std::function<void(long, long)> enumerate = [&](long i, long max_block) {
        if (i == n) {
            if (max_block + 1 == k) ++count;
            return;
        }
        for (long b = 0; b <= std::min(max_block + 1, k - 1); ++b) {
            enumerate(i + 1, std::max(max_block, b));
        }
    };
    enumerate(0, -1);
    return count;
}

}  // namespace

TEST_CASE("sd_number matches the figurate sequences") {
    CHECK(sd_number(2, 4) == 10);
    CHECK(sd_number(3, 5) == 35);
    CHECK(sd_number(5, 0) == 0);
    CHECK(sd_number(1, 7) == 7);
    // triangular and tetrahedral prefixes
    const std::vector<long> triangular{0, 1, 3, 6, 10, 15, 21, 28, 36, 45, 55, 66};
    for (std::size_t n = 0; n < triangular.size(); ++n) {
        CHECK(sd_number(2, static_cast<long>(n)) == triangular[n]);
    }
    const std::vector<long> tetrahedral{0, 1, 4, 10, 20, 35, 56, 84, 120, 165};
    for (std::size_t n = 0; n < tetrahedral.size(); ++n) {
        CHECK(sd_number(3, static_cast<long>(n)) == tetrahedral[n]);
    }
    CHECK(sd_number(4, 2) == 5);
    CHECK(sd_number(5, 4) == 56);  // C(8,5); hexateron list 0,1,6,21,56,126,...

    CHECK_THROWS_AS(sd_number(0, 3), std::domain_error);
    CHECK_THROWS_AS(sd_number(-1, 3), std::domain_error);
    CHECK_THROWS_AS(sd_number(2, -1), std::domain_error);
}

TEST_CASE("sd_number is zero only at n = 0 and strictly monotone after n = 1") {
    for (int d = 1; d <= 8; ++d) {
        CHECK(sd_number(d, 0) == 0);
        for (long n = 1; n <= 30; ++n) {
            CHECK(sd_number(d, n) > 0);
            if (n >= 1) CHECK(sd_number(d, n + 1) > sd_number(d, n));
        }
    }
}

TEST_CASE("the three representations agree exhaustively") {
    for (int d = 1; d <= 8; ++d) {
        for (long n = 0; n <= 50; ++n) {
            const Integer direct = sd_number(d, n);
            CHECK(sd_number_via_binomial_sum(d, n) == direct);
            CHECK(sd_number_via_stirling(d, n) == direct);
        }
    }
    CHECK(sd_number_via_binomial_sum(2, 4) == 10);
    CHECK(sd_number_via_binomial_sum(3, 0) == 0);
    CHECK(sd_number_via_stirling(2, 3) == 6);  // (3 + 9)/2
    for (long n = 0; n <= 20; ++n) {
        CHECK(sd_number_via_stirling(1, n) == n);
    }
}

TEST_CASE("recursion descends one dimension") {
    for (int d = 2; d <= 8; ++d) {
        for (long n = 0; n <= 50; ++n) {
            CHECK(sd_number(d, n + 1) == sd_number(d, n) + sd_number(d - 1, n + 1));
        }
    }
}

TEST_CASE("sd_factorial are products of sd numbers") {
    CHECK(sd_factorial(2, 4) == 180);  // 1*3*6*10
    CHECK(sd_factorial(3, 3) == 40);   // 1*4*10
    for (int d = 1; d <= 6; ++d) {
        CHECK(sd_factorial(d, 0) == 1);
        Integer product(1);
        for (long n = 1; n <= 20; ++n) {
            product *= sd_number(d, n);
            CHECK(sd_factorial(d, n) == product);
        }
    }
}

TEST_CASE("simplitorial dimension descent and closed form") {
    for (int d = 2; d <= 8; ++d) {
        for (long n = 0; n <= 30; ++n) {
            const Rational lhs{sd_factorial(d, n)};
            const Rational rhs = Rational(rising_factorial(Integer(d), n), int_pow(Integer(d), n)) *
                                 Rational(sd_factorial(d - 1, n));
            CHECK(lhs == rhs);

            Integer closed_lhs = sd_factorial(d, n) * int_pow(factorial(d), n);
            Integer closed_rhs(1);
            for (int i = 0; i < d; ++i) {
                closed_lhs *= factorial(i);
                closed_rhs *= factorial(n + i);
            }
            CHECK(closed_lhs == closed_rhs);
        }
    }
}

TEST_CASE("hoggatt binomials: values, symmetry, product form") {
    // Narayana oracle at d = 2: (1/(k+1)) C(n,k) C(n+1,k)
    for (long n = 0; n <= 25; ++n) {
        for (long k = 0; k <= n; ++k) {
            const Rational narayana =
                Rational(binomial(n, k) * binomial(n + 1, k), Integer(k + 1));
            CHECK(hoggatt_binomial(2, n, k) == narayana);
        }
    }
    CHECK(hoggatt_binomial(2, 4, 2) == Rational(20));

    // product-form oracle (per-factor evaluation)
    for (int d = 1; d <= 5; ++d) {
        for (long n = 0; n <= 12; ++n) {
            for (long k = 0; k <= n; ++k) {
                Rational product(1);
                for (int i = 0; i < d; ++i) {
                    product *= Rational(factorial(i) * factorial(n + i),
                                        factorial(k + i) * factorial(n - k + i));
                }
                CHECK(hoggatt_binomial(d, n, k) == product);
            }
        }
    }
    CHECK(hoggatt_binomial(3, 6, 3) == Rational(980));

    for (int d = 1; d <= 6; ++d) {
        for (long n = 0; n <= 25; ++n) {
            CHECK(hoggatt_binomial(d, n, 0) == Rational(1));
            CHECK(hoggatt_binomial(d, n, n) == Rational(1));
            if (n >= 1) CHECK(hoggatt_binomial(d, n, 1) == Rational(sd_number(d, n)));
            for (long k = 0; k <= n; ++k) {
                CHECK(hoggatt_binomial(d, n, k) == hoggatt_binomial(d, n, n - k));
                // observed integrality, not a theorem
                CHECK(hoggatt_binomial(d, n, k).denominator() == 1);
            }
        }
    }

    CHECK_THROWS_AS(hoggatt_binomial(2, 3, 4), std::domain_error);
    CHECK_THROWS_AS(hoggatt_binomial(2, 3, -1), std::domain_error);
}

TEST_CASE("sd_pochhammer") {
    CHECK(sd_pochhammer(2, 3, 2) == 60);  // 6 * 10
    for (int d = 1; d <= 5; ++d) {
        CHECK(sd_pochhammer(d, 3, 0) == 1);
        for (long n = 0; n <= 15; ++n) {
            CHECK(sd_pochhammer(d, 1, n) == sd_factorial(d, n));
        }
        for (long a = 1; a <= 6; ++a) {
            Integer product(1);
            for (long n = 1; n <= 10; ++n) {
                product *= sd_number(d, a + n - 1);
                CHECK(sd_pochhammer(d, a, n) == product);
            }
        }
    }
    CHECK_THROWS_AS(sd_pochhammer(2, 0, 3), std::domain_error);
    CHECK_THROWS_AS(sd_pochhammer(2, -1, 3), std::domain_error);
}

TEST_CASE("stirling numbers against brute-force oracles") {
    // first kind: coefficients of x(x+1)(x+2)(x+3)
    const auto coeffs4 = rising_factorial_coefficients(4);
    CHECK(stirling_first_unsigned(4, 2) == coeffs4[2]);
    CHECK(stirling_first_unsigned(4, 2) == 11);
    for (long n = 0; n <= 9; ++n) {
        const auto coeffs = rising_factorial_coefficients(n);
        for (long k = 0; k <= n; ++k) {
            CHECK(stirling_first_unsigned(n, k) == coeffs[static_cast<std::size_t>(k)]);
        }
    }

    // second kind: set-partition counts
    CHECK(stirling_second(4, 2) == count_partitions(4, 2));
    CHECK(stirling_second(4, 2) == 7);
    for (long n = 1; n <= 7; ++n) {
        for (long k = 1; k <= n; ++k) {
            CHECK(stirling_second(n, k) == count_partitions(n, k));
        }
    }

    for (long n = 0; n <= 12; ++n) {
        CHECK(stirling_first_unsigned(n, n) == 1);
        CHECK(stirling_second(n, n) == 1);
        CHECK(stirling_first_unsigned(n, n + 1) == 0);
        CHECK(stirling_second(n, n + 3) == 0);
    }
    CHECK_THROWS_AS(stirling_first_unsigned(-1, 0), std::domain_error);
    CHECK_THROWS_AS(stirling_second(3, -1), std::domain_error);
}

TEST_CASE("pascal factor reproduces the recurrence") {
    // closed form at d = 2
    for (long n = 1; n <= 20; ++n) {
        for (long k = 1; k <= n; ++k) {
            CHECK(pascal_factor(2, n, k) == Rational(n + 2 + k, n + 2 - k));
        }
    }
    CHECK(pascal_factor(2, 4, 2) == Rational(2));
    CHECK(pascal_factor(3, 3, 1) == Rational(19, 10));

    for (int d = 2; d <= 6; ++d) {
        for (long n = 1; n <= 25; ++n) {
            for (long k = 1; k <= n; ++k) {
                const Rational lhs = hoggatt_binomial(d, n + 1, k);
                const Rational rhs = pascal_factor(d, n, k) * hoggatt_binomial(d, n, k) +
                                     hoggatt_binomial(d, n, k - 1);
                CHECK(lhs == rhs);
            }
        }
    }
    CHECK_THROWS_AS(pascal_factor(1, 3, 1), std::domain_error);
    CHECK_THROWS_AS(pascal_factor(2, 3, 0), std::domain_error);
    CHECK_THROWS_AS(pascal_factor(2, 3, 4), std::domain_error);
}

TEST_CASE("rising factorial") {
    CHECK(rising_factorial(Integer(3), 2) == 12);
    CHECK(rising_factorial(Integer(5), 0) == 1);
    for (long n = 0; n <= 10; ++n) {
        CHECK(rising_factorial(Integer(1), n) == factorial(n));
    }
    for (long d = 1; d <= 8; ++d) {
        for (long n = 0; n <= 20; ++n) {
            CHECK(rising_factorial(Integer(d), n) * factorial(d - 1) == factorial(n + d - 1));
        }
    }
}

TEST_CASE("dimension convolution with the zero-dimensional convention") {
    const auto sd0 = [](long dim, long x) {
        return dim == 0 ? Integer(1) : sd_number(static_cast<int>(dim), x);
    };
    for (long dim = 1; dim <= 8; ++dim) {
        for (long a = 1; a <= 10; ++a) {
            for (long b = 1; b <= 10; ++b) {
                Integer rhs(0);
                for (long k = 0; k <= dim; ++k) {
                    rhs += sd0(dim - k, a) * sd0(k, b);
                }
                CHECK(sd_number(static_cast<int>(dim), a + b) == rhs);
            }
        }
    }
}

TEST_CASE("narayana cross identity") {
    for (long n = 1; n <= 25; ++n) {
        for (long k = 1; k <= n; ++k) {
            const Rational lhs{binomial(n + 1, k) * binomial(n + 2, k)};
            const Rational rhs =
                Rational(n + 2 + k, n + 2 - k) * Rational(binomial(n, k) * binomial(n + 1, k)) +
                Rational(k + 1, k) * Rational(binomial(n, k - 1) * binomial(n + 1, k - 1));
            CHECK(lhs == rhs);
        }
    }
}
