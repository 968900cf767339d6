#include "sdcalc/polynomial.hpp"

#include "sdcalc/combinatorics.hpp"

#include <sstream>
#include <stdexcept>

namespace sdcalc {

namespace {
const Rational kZero{};
}

Polynomial::Polynomial(std::vector<Rational> coefficients)
    : coefficients_(std::move(coefficients)) {
    trim();
}

Polynomial Polynomial::constant(const Rational& c) {
    return Polynomial({c});
}

Polynomial Polynomial::monomial(long degree, const Rational& coefficient) {
    if (degree < 0) {
        throw std::domain_error("Polynomial::monomial: negative degree");
    }
    std::vector<Rational> coeffs(static_cast<std::size_t>(degree) + 1);
    coeffs.back() = coefficient;
    return Polynomial(std::move(coeffs));
}

void Polynomial::trim() {
    while (!coefficients_.empty() && coefficients_.back().is_zero()) {
        coefficients_.pop_back();
    }
}

const Rational& Polynomial::coefficient(long i) const {
    if (i < 0 || i >= static_cast<long>(coefficients_.size())) {
        return kZero;
    }
    return coefficients_[static_cast<std::size_t>(i)];
}

Rational Polynomial::evaluate(const Rational& x) const {
    Rational result;
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
        result = result * x + *it;
    }
    return result;
}

Polynomial Polynomial::derivative() const {
    if (coefficients_.size() <= 1) {
        return Polynomial();
    }
    std::vector<Rational> out(coefficients_.size() - 1);
    for (std::size_t i = 1; i < coefficients_.size(); ++i) {
        out[i - 1] = Rational(static_cast<long>(i)) * coefficients_[i];
    }
    return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.coefficients_.size() > coefficients_.size()) {
        coefficients_.resize(o.coefficients_.size());
    }
    for (std::size_t i = 0; i < o.coefficients_.size(); ++i) {
        coefficients_[i] += o.coefficients_[i];
    }
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.coefficients_.size() > coefficients_.size()) {
        coefficients_.resize(o.coefficients_.size());
    }
    for (std::size_t i = 0; i < o.coefficients_.size(); ++i) {
        coefficients_[i] -= o.coefficients_[i];
    }
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
    for (auto& c : coefficients_) {
        c *= s;
    }
    trim();
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& c : r.coefficients_) {
        c = -c;
    }
    return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) {
        return Polynomial();
    }
    std::vector<Rational> out(a.coefficients_.size() + b.coefficients_.size() - 1);
    for (std::size_t i = 0; i < a.coefficients_.size(); ++i) {
        for (std::size_t j = 0; j < b.coefficients_.size(); ++j) {
            out[i + j] += a.coefficients_[i] * b.coefficients_[j];
        }
    }
    return Polynomial(std::move(out));
}

std::string Polynomial::str() const {
    if (is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool leading = true;
    for (long i = degree(); i >= 0; --i) {
        const Rational& c = coefficient(i);
        if (c.is_zero()) continue;
        Rational mag = c.sign() < 0 ? -c : c;
        if (leading) {
            if (c.sign() < 0) os << "-";
            leading = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        const bool unit = mag == Rational(1);
        if (i == 0 || !unit) {
            os << mag.str();
        }
        if (i > 0) {
            if (!unit) os << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

BivariatePolynomial::BivariatePolynomial(std::vector<std::vector<Rational>> grid)
    : grid_(std::move(grid)) {
    trim();
}

BivariatePolynomial BivariatePolynomial::term(long x_degree, long y_degree, const Rational& coefficient) {
    if (x_degree < 0 || y_degree < 0) {
        throw std::domain_error("BivariatePolynomial::term: negative degree");
    }
    std::vector<std::vector<Rational>> grid(static_cast<std::size_t>(x_degree) + 1);
    grid.back().resize(static_cast<std::size_t>(y_degree) + 1);
    grid.back().back() = coefficient;
    return BivariatePolynomial(std::move(grid));
}

void BivariatePolynomial::trim() {
    for (auto& row : grid_) {
        while (!row.empty() && row.back().is_zero()) {
            row.pop_back();
        }
    }
    while (!grid_.empty() && grid_.back().empty()) {
        grid_.pop_back();
    }
}

long BivariatePolynomial::degree_y() const {
    long deg = -1;
    for (const auto& row : grid_) {
        deg = std::max(deg, static_cast<long>(row.size()) - 1);
    }
    return deg;
}

const Rational& BivariatePolynomial::coefficient(long i, long j) const {
    if (i < 0 || i >= static_cast<long>(grid_.size())) {
        return kZero;
    }
    const auto& row = grid_[static_cast<std::size_t>(i)];
    if (j < 0 || j >= static_cast<long>(row.size())) {
        return kZero;
    }
    return row[static_cast<std::size_t>(j)];
}

Rational BivariatePolynomial::evaluate(const Rational& x, const Rational& y) const {
    Rational result;
    Rational xpow(1);
    for (const auto& row : grid_) {
        Rational ypow(1);
        for (const auto& c : row) {
            result += c * xpow * ypow;
            ypow *= y;
        }
        xpow *= x;
    }
    return result;
}

Polynomial BivariatePolynomial::at_y(const Rational& y) const {
    std::vector<Rational> coeffs(grid_.size());
    for (std::size_t i = 0; i < grid_.size(); ++i) {
        Rational ypow(1);
        for (const auto& c : grid_[i]) {
            coeffs[i] += c * ypow;
            ypow *= y;
        }
    }
    return Polynomial(std::move(coeffs));
}

BivariatePolynomial& BivariatePolynomial::operator+=(const BivariatePolynomial& o) {
    if (o.grid_.size() > grid_.size()) {
        grid_.resize(o.grid_.size());
    }
    for (std::size_t i = 0; i < o.grid_.size(); ++i) {
        auto& row = grid_[i];
        const auto& orow = o.grid_[i];
        if (orow.size() > row.size()) {
            row.resize(orow.size());
        }
        for (std::size_t j = 0; j < orow.size(); ++j) {
            row[j] += orow[j];
        }
    }
    trim();
    return *this;
}

BivariatePolynomial& BivariatePolynomial::operator-=(const BivariatePolynomial& o) {
    BivariatePolynomial neg = o;
    neg *= Rational(-1);
    return *this += neg;
}

BivariatePolynomial& BivariatePolynomial::operator*=(const Rational& s) {
    for (auto& row : grid_) {
        for (auto& c : row) {
            c *= s;
        }
    }
    trim();
    return *this;
}

BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b) {
    if (a.is_zero() || b.is_zero()) {
        return BivariatePolynomial();
    }
    std::size_t max_ya = 0, max_yb = 0;
    for (const auto& row : a.grid_) max_ya = std::max(max_ya, row.size());
    for (const auto& row : b.grid_) max_yb = std::max(max_yb, row.size());
    std::vector<std::vector<Rational>> out(
        a.grid_.size() + b.grid_.size() - 1,
        std::vector<Rational>(max_ya + max_yb - 1));
    for (std::size_t i = 0; i < a.grid_.size(); ++i) {
        for (std::size_t j = 0; j < a.grid_[i].size(); ++j) {
            if (a.grid_[i][j].is_zero()) continue;
            for (std::size_t k = 0; k < b.grid_.size(); ++k) {
                for (std::size_t l = 0; l < b.grid_[k].size(); ++l) {
                    out[i + k][j + l] += a.grid_[i][j] * b.grid_[k][l];
                }
            }
        }
    }
    return BivariatePolynomial(std::move(out));
}

Polynomial sd_derivative_operator_form(const Polynomial& p, int d) {
    if (d < 1) {
        throw std::domain_error("sd_derivative: dimension d must be >= 1");
    }
    Polynomial result;
    Polynomial deriv = p.derivative();
    for (int k = 0; k < d; ++k) {
        // term: C(d-1,k)/(k+1)! * x^k * p^(k+1)
        const Rational weight(binomial(d - 1, k), factorial(k + 1));
        result += Polynomial::monomial(k, weight) * deriv;
        deriv = deriv.derivative();
    }
    return result;
}

Polynomial sd_derivative_stirling_form(const Polynomial& p, int d) {
    if (d < 1) {
        throw std::domain_error("sd_derivative: dimension d must be >= 1");
    }
    const Rational inv_dfac(Integer(1), factorial(d));
    std::vector<Rational> out;
    if (p.degree() >= 1) {
        out.resize(static_cast<std::size_t>(p.degree()));
    }
    for (long n = 0; n <= p.degree(); ++n) {
        if (p.coefficient(n).is_zero()) continue;
        // (xD)^k x^n = n^k x^n, so the whole operator multiplies by
        // sum_k s1(d,k) n^k / d! and shifts the degree down by one.
        Integer weight(0);
        for (long k = 0; k <= d; ++k) {
            weight += stirling_first_unsigned(d, k) * int_pow(Integer(n), k);
        }
        if (n == 0) {
            if (weight != 0) {
                throw std::logic_error("sd_derivative_stirling_form: negative-degree term survived");
            }
            continue;
        }
        out[static_cast<std::size_t>(n - 1)] = p.coefficient(n) * Rational(weight) * inv_dfac;
    }
    return Polynomial(std::move(out));
}

Polynomial sd_derivative_iterated(const Polynomial& p, int d, long k) {
    if (k < 0) {
        throw std::domain_error("sd_derivative_iterated: negative order");
    }
    Polynomial result = p;
    for (long i = 0; i < k && !result.is_zero(); ++i) {
        result = sd_derivative_operator_form(result, d);
    }
    return result;
}

Polynomial sd_product_rule_rhs(const Polynomial& f, const Polynomial& g, int d) {
    if (d < 2) {
        throw std::domain_error("sd_product_rule_rhs: requires d >= 2");
    }
    Polynomial result = sd_derivative_operator_form(f, d) * g + f * sd_derivative_operator_form(g, d);

    std::vector<Polynomial> f_derivs{f};
    std::vector<Polynomial> g_derivs{g};
    for (int i = 0; i < d + 1; ++i) {
        f_derivs.push_back(f_derivs.back().derivative());
        g_derivs.push_back(g_derivs.back().derivative());
    }
    for (int k = 1; k < d; ++k) {
        Polynomial cross;
        for (int i = 1; i <= k; ++i) {
            cross += Rational(binomial(k + 1, i)) *
                     (f_derivs[static_cast<std::size_t>(k + 1 - i)] * g_derivs[static_cast<std::size_t>(i)]);
        }
        const Rational weight(binomial(d - 1, k), factorial(k + 1));
        result += Polynomial::monomial(k, weight) * cross;
    }
    return result;
}

Polynomial touchard_polynomial(long n) {
    if (n < 0) {
        throw std::domain_error("touchard_polynomial: negative degree");
    }
    std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1);
    for (long i = 0; i <= n; ++i) {
        coeffs[static_cast<std::size_t>(i)] = Rational(stirling_second(n, i));
    }
    return Polynomial(std::move(coeffs));
}

Polynomial kummer_polynomial(int d) {
    if (d < 1) {
        throw std::domain_error("kummer_polynomial: dimension d must be >= 1");
    }
    std::vector<Rational> coeffs(static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k) {
        coeffs[static_cast<std::size_t>(k)] = Rational(binomial(d - 1, k), factorial(k + 1));
    }
    return Polynomial(std::move(coeffs));
}

Polynomial kummer_touchard_rhs(int d) {
    if (d < 1) {
        throw std::domain_error("kummer_touchard_rhs: dimension d must be >= 1");
    }
    Polynomial sum;
    for (int k = 0; k <= d; ++k) {
        sum += Rational(stirling_first_unsigned(d, k)) * touchard_polynomial(k);
    }
    sum *= Rational(Integer(1), factorial(d));
    if (!sum.coefficient(0).is_zero()) {
        throw std::logic_error("kummer_touchard_rhs: nonzero constant term, Stirling convention drift");
    }
    // divide by x
    std::vector<Rational> shifted;
    for (long i = 1; i <= sum.degree(); ++i) {
        shifted.push_back(sum.coefficient(i));
    }
    return Polynomial(std::move(shifted));
}

BivariatePolynomial bivariate_hoggatt(int d, long n) {
    if (d < 1) {
        throw std::domain_error("bivariate_hoggatt: dimension d must be >= 1");
    }
    if (n < 0) {
        throw std::domain_error("bivariate_hoggatt: negative degree");
    }
    std::vector<std::vector<Rational>> grid(static_cast<std::size_t>(n) + 1);
    for (long k = 0; k <= n; ++k) {
        auto& row = grid[static_cast<std::size_t>(n - k)];  // x-degree n-k
        row.resize(static_cast<std::size_t>(k) + 1);
        row.back() = hoggatt_binomial(d, n, k);
    }
    return BivariatePolynomial(std::move(grid));
}

BivariatePolynomial sd_derivative_x(const BivariatePolynomial& p, int d) {
    // differentiate each y-degree slice as a polynomial in x, reassemble
    BivariatePolynomial result;
    for (long j = 0; j <= p.degree_y(); ++j) {
        std::vector<Rational> slice(static_cast<std::size_t>(p.degree_x()) + 1);
        for (long i = 0; i <= p.degree_x(); ++i) {
            slice[static_cast<std::size_t>(i)] = p.coefficient(i, j);
        }
        const Polynomial derived = sd_derivative_operator_form(Polynomial(std::move(slice)), d);
        for (long i = 0; i <= derived.degree(); ++i) {
            if (!derived.coefficient(i).is_zero()) {
                result += BivariatePolynomial::term(i, j, derived.coefficient(i));
            }
        }
    }
    return result;
}

Polynomial hoggatt_translate(std::span<const Polynomial> family, int d, long n, const Rational& y) {
    if (n < 0) {
        throw std::domain_error("hoggatt_translate: negative degree");
    }
    if (static_cast<long>(family.size()) < n + 1) {
        throw std::domain_error("hoggatt_translate: family must provide p_0..p_n");
    }
    Polynomial result;
    for (long k = 0; k <= n; ++k) {
        result += hoggatt_binomial(d, n, k) * pow(y, n - k) * family[static_cast<std::size_t>(k)];
    }
    return result;
}

}  // namespace sdcalc
