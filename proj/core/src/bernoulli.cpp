#include "sdcalc/bernoulli.hpp"

#include "sdcalc/combinatorics.hpp"
#include "sdcalc/series.hpp"

#include <stdexcept>

namespace sdcalc {

BernoulliTable bernoulli_numbers_series(int d, long m, long n_max) {
    if (n_max < 0) {
        throw std::domain_error("bernoulli_numbers_series: negative count");
    }
    const TruncatedSeries reciprocal = one_sigma_one_tail(d, m, n_max).inverse();
    BernoulliTable table{d, m, BernoulliMethod::series_inversion, {}};
    table.values.reserve(static_cast<std::size_t>(n_max) + 1);
    Integer fac(1);
    for (long n = 0; n <= n_max; ++n) {
        if (n > 0) fac *= sd_number(d, n);
        table.values.push_back(Rational(fac) * reciprocal.coefficient(n));
    }
    return table;
}

Rational bernoulli_number_composition(int d, long m, long n) {
    if (n < 0) {
        throw std::domain_error("bernoulli_number_composition: negative index");
    }
    if (m < 1) {
        throw std::domain_error("bernoulli_number_composition: requires m >= 1");
    }
    if (n > kCompositionSumCap) {
        throw std::length_error(
            "bernoulli_number_composition: n exceeds the composition cap; "
            "use bernoulli_numbers_series instead");
    }
    if (n == 0) {
        return Rational(1);  // constant term of the generating function
    }

    std::vector<Integer> poch(static_cast<std::size_t>(n) + 1);
    for (long k = 0; k <= n; ++k) {
        poch[static_cast<std::size_t>(k)] = sd_pochhammer(d, m + 1, k);
    }
    const Integer numerator = sd_factorial(d, n);

    // Compositions of n correspond to subsets of the n-1 gap positions:
    // bit g set in mask means a part boundary after position g+1.
    Rational total;
    const unsigned long masks = 1ul << static_cast<unsigned long>(n - 1);
    for (unsigned long mask = 0; mask < masks; ++mask) {
        Integer denominator(1);
        long parts = 0;
        long part_len = 1;
        for (long g = 0; g < n - 1; ++g) {
            if (mask & (1ul << static_cast<unsigned long>(g))) {
                denominator *= poch[static_cast<std::size_t>(part_len)];
                ++parts;
                part_len = 1;
            } else {
                ++part_len;
            }
        }
        denominator *= poch[static_cast<std::size_t>(part_len)];
        ++parts;
        const Rational term(numerator, denominator);
        total += (parts % 2 == 0) ? term : -term;
    }
    return total;
}

BernoulliTable bernoulli_numbers_composition(int d, long m, long n_max) {
    BernoulliTable table{d, m, BernoulliMethod::composition_sum, {}};
    table.values.reserve(static_cast<std::size_t>(n_max) + 1);
    for (long n = 0; n <= n_max; ++n) {
        table.values.push_back(bernoulli_number_composition(d, m, n));
    }
    return table;
}

BernoulliPolynomialFamily bernoulli_polynomials(int d, long m, long n_max) {
    const BernoulliTable numbers = bernoulli_numbers_series(d, m, n_max);
    BernoulliPolynomialFamily family{d, m, {}};
    family.polynomials.reserve(static_cast<std::size_t>(n_max) + 1);
    for (long n = 0; n <= n_max; ++n) {
        std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1);
        for (long k = 0; k <= n; ++k) {
            // coefficient of x^(n-k)
            coeffs[static_cast<std::size_t>(n - k)] = hoggatt_binomial(d, n, k) * numbers.value(k);
        }
        family.polynomials.emplace_back(std::move(coeffs));
    }
    return family;
}

}  // namespace sdcalc
