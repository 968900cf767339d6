#include "sdcalc/combinatorics.hpp"

#include <stdexcept>
#include <vector>

namespace sdcalc {

namespace {

void require_dimension(int d) {
    if (d < 1) {
        throw std::domain_error("dimension d must be >= 1");
    }
}

void require_index(long n) {
    if (n < 0) {
        throw std::domain_error("index n must be >= 0");
    }
}

// Triangle of either Stirling kind built row by row up to row n.
// first kind:  s(r,c) = s(r-1,c-1) + (r-1) s(r-1,c)
// second kind: S(r,c) = S(r-1,c-1) + c     S(r-1,c)
std::vector<Integer> stirling_row(long n, bool first_kind) {
    std::vector<Integer> row{Integer(1)};
    for (long r = 1; r <= n; ++r) {
        std::vector<Integer> next(static_cast<std::size_t>(r) + 1, Integer(0));
        for (long c = 1; c <= r; ++c) {
            const Integer above = c < r ? row[static_cast<std::size_t>(c)] : Integer(0);
            const Integer weight = first_kind ? Integer(r - 1) : Integer(c);
            next[static_cast<std::size_t>(c)] = row[static_cast<std::size_t>(c - 1)] + weight * above;
        }
        row = std::move(next);
    }
    return row;
}

}  // namespace

Integer binomial(long n, long k) {
    if (n < 0) {
        throw std::domain_error("binomial: n must be >= 0");
    }
    if (k < 0 || k > n) {
        return Integer(0);
    }
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Integer factorial(long n) {
    if (n < 0) {
        throw std::domain_error("factorial: n must be >= 0");
    }
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Integer rising_factorial(const Integer& a, long n) {
    require_index(n);
    Integer product(1);
    for (long j = 0; j < n; ++j) {
        product *= a + j;
    }
    return product;
}

Integer sd_number(int d, long n) {
    require_dimension(d);
    require_index(n);
    return binomial(n + d - 1, d);
}

Integer sd_number_via_binomial_sum(int d, long n) {
    require_dimension(d);
    require_index(n);
    Integer sum(0);
    for (long k = 0; k < d; ++k) {
        sum += binomial(d - 1, k) * binomial(n, k + 1);
    }
    return sum;
}

Integer sd_number_via_stirling(int d, long n) {
    require_dimension(d);
    require_index(n);
    const std::vector<Integer> s1 = stirling_row(d, /*first_kind=*/true);
    Integer sum(0);
    for (long k = 0; k <= d; ++k) {
        sum += s1[static_cast<std::size_t>(k)] * int_pow(Integer(n), k);
    }
    const Integer dfac = factorial(d);
    if (!mpz_divisible_p(sum.get_mpz_t(), dfac.get_mpz_t())) {
        throw std::logic_error("sd_number_via_stirling: inexact division, Stirling convention drift");
    }
    Integer q;
    mpz_divexact(q.get_mpz_t(), sum.get_mpz_t(), dfac.get_mpz_t());
    return q;
}

Integer sd_factorial(int d, long n) {
    require_dimension(d);
    require_index(n);
    Integer product(1);
    for (long k = 1; k <= n; ++k) {
        product *= sd_number(d, k);
    }
    return product;
}

Rational hoggatt_binomial(int d, long n, long k) {
    require_dimension(d);
    if (k < 0 || k > n) {
        throw std::domain_error("hoggatt_binomial: k must satisfy 0 <= k <= n");
    }
    return Rational(sd_factorial(d, n), sd_factorial(d, k) * sd_factorial(d, n - k));
}

Integer sd_pochhammer(int d, long a, long n) {
    require_dimension(d);
    require_index(n);
    if (a < 1) {
        throw std::domain_error("sd_pochhammer: base a must be >= 1");
    }
    Integer product(1);
    for (long j = 0; j < n; ++j) {
        product *= sd_number(d, a + j);
    }
    return product;
}

Integer stirling_first_unsigned(long n, long k) {
    if (n < 0 || k < 0) {
        throw std::domain_error("stirling_first_unsigned: negative argument");
    }
    if (k > n) {
        return Integer(0);
    }
    return stirling_row(n, /*first_kind=*/true)[static_cast<std::size_t>(k)];
}

Integer stirling_second(long n, long k) {
    if (n < 0 || k < 0) {
        throw std::domain_error("stirling_second: negative argument");
    }
    if (k > n) {
        return Integer(0);
    }
    return stirling_row(n, /*first_kind=*/false)[static_cast<std::size_t>(k)];
}

Rational pascal_factor(int d, long n, long k) {
    if (d < 2) {
        throw std::domain_error("pascal_factor: requires d >= 2");
    }
    if (k < 1 || k > n) {
        throw std::domain_error("pascal_factor: k must satisfy 1 <= k <= n");
    }
    Integer sum(0);
    for (int i = 1; i < d; ++i) {
        sum += sd_number(d - i, n + 1 - k) * sd_number(i, k);
    }
    return Rational(1) + Rational(sum, sd_number(d, n + 1 - k));
}

}  // namespace sdcalc
