#include "sdcalc/series.hpp"

#include "sdcalc/combinatorics.hpp"

#include <stdexcept>

namespace sdcalc {

namespace {

void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.order() != b.order()) {
        throw std::domain_error("TruncatedSeries: truncation order mismatch");
    }
}

void require_order(long order) {
    if (order < 0) {
        throw std::domain_error("TruncatedSeries: negative order");
    }
}

void require_dimension(int d) {
    if (d < 1) {
        throw std::domain_error("dimension d must be >= 1");
    }
}

}  // namespace

TruncatedSeries::TruncatedSeries(long order) : order_(order) {
    if (order < 0) {
        throw std::domain_error("TruncatedSeries: negative order");
    }
    coefficients_.resize(static_cast<std::size_t>(order) + 1);
}

TruncatedSeries::TruncatedSeries(long order, std::vector<Rational> coefficients)
    : TruncatedSeries(order) {
    if (coefficients.size() > coefficients_.size()) {
        throw std::domain_error("TruncatedSeries: more coefficients than order allows");
    }
    std::copy(coefficients.begin(), coefficients.end(), coefficients_.begin());
}

const Rational& TruncatedSeries::coefficient(long n) const {
    if (n < 0 || n > order_) {
        throw std::domain_error("TruncatedSeries: coefficient index out of range");
    }
    return coefficients_[static_cast<std::size_t>(n)];
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
    require_same_order(*this, o);
    for (std::size_t i = 0; i < coefficients_.size(); ++i) {
        coefficients_[i] += o.coefficients_[i];
    }
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
    require_same_order(*this, o);
    for (std::size_t i = 0; i < coefficients_.size(); ++i) {
        coefficients_[i] -= o.coefficients_[i];
    }
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b);
    TruncatedSeries out(a.order_);
    for (std::size_t i = 0; i < a.coefficients_.size(); ++i) {
        if (a.coefficients_[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < a.coefficients_.size(); ++j) {
            out.coefficients_[i + j] += a.coefficients_[i] * b.coefficients_[j];
        }
    }
    return out;
}

TruncatedSeries TruncatedSeries::inverse() const {
    if (coefficients_[0].is_zero()) {
        throw std::domain_error("TruncatedSeries: inverse requires nonzero constant term");
    }
    TruncatedSeries out(order_);
    const Rational lead = Rational(1) / coefficients_[0];
    out.coefficients_[0] = lead;
    for (long n = 1; n <= order_; ++n) {
        Rational acc;
        for (long k = 1; k <= n; ++k) {
            acc += coefficients_[static_cast<std::size_t>(k)] *
                   out.coefficients_[static_cast<std::size_t>(n - k)];
        }
        out.coefficients_[static_cast<std::size_t>(n)] = -lead * acc;
    }
    return out;
}

TruncatedSeries TruncatedSeries::scaled(const Rational& s) const {
    TruncatedSeries out(order_);
    for (std::size_t i = 0; i < coefficients_.size(); ++i) {
        out.coefficients_[i] = s * coefficients_[i];
    }
    return out;
}

TruncatedSeries TruncatedSeries::with_scaled_argument(const Rational& x) const {
    TruncatedSeries out(order_);
    Rational xpow(1);
    for (std::size_t i = 0; i < coefficients_.size(); ++i) {
        out.coefficients_[i] = coefficients_[i] * xpow;
        xpow *= x;
    }
    return out;
}

TruncatedSeries exp_d_series(int d, long order) {
    require_dimension(d);
    require_order(order);
    std::vector<Rational> coeffs(static_cast<std::size_t>(order) + 1);
    Integer fac(1);
    for (long n = 0; n <= order; ++n) {
        if (n > 0) fac *= sd_number(d, n);
        coeffs[static_cast<std::size_t>(n)] = Rational(Integer(1), fac);
    }
    return TruncatedSeries(order, std::move(coeffs));
}

Polynomial exp_d_partial_sum(int d, long m) {
    if (m < 0) {
        throw std::domain_error("exp_d_partial_sum: negative degree");
    }
    return Polynomial(exp_d_series(d, m).coefficients());
}

TruncatedSeries sigma_series(int d, const std::vector<long>& upper,
                             const std::vector<long>& lower, long order) {
    require_dimension(d);
    require_order(order);
    for (long a : upper) {
        if (a < 1) {
            throw std::domain_error("sigma_series: parameters must be positive integers");
        }
    }
    for (long b : lower) {
        if (b < 1) {
            throw std::domain_error("sigma_series: lower parameters must be positive integers");
        }
    }
    std::vector<Rational> coeffs(static_cast<std::size_t>(order) + 1);
    Integer numerator(1);
    Integer denominator(1);
    for (long n = 0; n <= order; ++n) {
        if (n > 0) {
            for (long a : upper) numerator *= sd_number(d, a + n - 1);
            for (long b : lower) denominator *= sd_number(d, b + n - 1);
            denominator *= sd_number(d, n);  // extends the simplitorial
        }
        coeffs[static_cast<std::size_t>(n)] = Rational(numerator, denominator);
    }
    return TruncatedSeries(order, std::move(coeffs));
}

TruncatedSeries one_sigma_one_tail(int d, long m, long order) {
    if (m < 1) {
        throw std::domain_error("one_sigma_one_tail: requires m >= 1");
    }
    const TruncatedSeries direct = sigma_series(d, {1}, {m + 1}, order);

    // shifted route: coefficient n of sd_factorial(d,m) t^{-m} (exp_d - T_{d,m-1})
    // is sd_factorial(d,m) / sd_factorial(d,n+m)
    const TruncatedSeries exp_tail = exp_d_series(d, order + m);
    const Rational scale{sd_factorial(d, m)};
    std::vector<Rational> shifted(static_cast<std::size_t>(order) + 1);
    for (long n = 0; n <= order; ++n) {
        shifted[static_cast<std::size_t>(n)] = scale * exp_tail.coefficient(n + m);
    }
    if (TruncatedSeries(order, std::move(shifted)) != direct) {
        throw std::logic_error("one_sigma_one_tail: sigma series disagrees with exp_d tail");
    }
    return direct;
}

bool exp_hypergeometric_coefficient_check(int d, long order) {
    if (d < 1) {
        throw std::domain_error("exp_hypergeometric_coefficient_check: d must be >= 1");
    }
    for (long n = 0; n <= order; ++n) {
        Integer denominator = factorial(n);
        for (int j = 2; j <= d; ++j) {
            denominator *= rising_factorial(Integer(j), n);
        }
        const Rational rhs(int_pow(factorial(d), n), denominator);
        if (rhs != Rational(Integer(1), sd_factorial(d, n))) {
            return false;
        }
    }
    return true;
}

}  // namespace sdcalc
