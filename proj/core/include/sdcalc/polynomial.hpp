#pragma once

#include "sdcalc/rational.hpp"

#include <span>
#include <vector>

namespace sdcalc {

/// Dense univariate polynomial over Rational in one variable x. Coefficients
/// are indexed by degree; trailing zeros are trimmed, and the zero polynomial
/// is the canonical empty coefficient vector (degree -1).
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coefficients);

    static Polynomial constant(const Rational& c);
    static Polynomial monomial(long degree, const Rational& coefficient = Rational(1));

    bool is_zero() const { return coefficients_.empty(); }
    long degree() const { return static_cast<long>(coefficients_.size()) - 1; }

    /// Coefficient of x^i; zero beyond the stored range.
    const Rational& coefficient(long i) const;
    const std::vector<Rational>& coefficients() const { return coefficients_; }

    Rational evaluate(const Rational& x) const;

    /// Ordinary derivative d/dx.
    Polynomial derivative() const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Rational& s);

    Polynomial operator-() const;

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial p, const Rational& s) { return p *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial p) { return p *= s; }

    bool operator==(const Polynomial&) const = default;

    /// Human-readable form, e.g. "x^2 - x + 1/6"; "0" for the zero polynomial.
    std::string str() const;

private:
    void trim();
    std::vector<Rational> coefficients_;
};

/// Dense bivariate polynomial over Rational in x and y, stored as a grid of
/// coefficients indexed by (x-degree, y-degree).
class BivariatePolynomial {
public:
    BivariatePolynomial() = default;
    explicit BivariatePolynomial(std::vector<std::vector<Rational>> grid);

    static BivariatePolynomial term(long x_degree, long y_degree, const Rational& coefficient);

    bool is_zero() const { return grid_.empty(); }
    long degree_x() const { return static_cast<long>(grid_.size()) - 1; }
    long degree_y() const;
    const Rational& coefficient(long i, long j) const;

    Rational evaluate(const Rational& x, const Rational& y) const;

    /// Collapses y to a fixed rational, leaving a polynomial in x.
    Polynomial at_y(const Rational& y) const;

    BivariatePolynomial& operator+=(const BivariatePolynomial& o);
    BivariatePolynomial& operator-=(const BivariatePolynomial& o);
    BivariatePolynomial& operator*=(const Rational& s);

    friend BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial& b) { return a += b; }
    friend BivariatePolynomial operator-(BivariatePolynomial a, const BivariatePolynomial& b) { return a -= b; }
    friend BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b);
    friend BivariatePolynomial operator*(BivariatePolynomial p, const Rational& s) { return p *= s; }
    friend BivariatePolynomial operator*(const Rational& s, BivariatePolynomial p) { return p *= s; }

    bool operator==(const BivariatePolynomial&) const = default;

private:
    void trim();
    std::vector<std::vector<Rational>> grid_;
};

/// Simplicial d-polytopic derivative in its iterated-ordinary-derivative form:
///   sum_{k=0}^{d-1} C(d-1,k) (1/(k+1)!) x^k p^(k+1)(x).
/// Sends x^n to sd_number(d,n) x^(n-1); d = 1 is the ordinary derivative.
Polynomial sd_derivative_operator_form(const Polynomial& p, int d);

/// The same operator through the Stirling/Euler route: monomial x^n picks up
/// the factor (1/d!) sum_k s1(d,k) n^k and drops one degree. Computed by the
/// (xD)^k action directly, so the two forms are computationally independent.
Polynomial sd_derivative_stirling_form(const Polynomial& p, int d);

/// k-fold application of the S_d-derivative (operator form).
Polynomial sd_derivative_iterated(const Polynomial& p, int d, long k);

/// Right-hand side of the S_d product rule (requires d >= 2):
///   D f * g + f * D g
///   + sum_{k=1}^{d-1} C(d-1,k) (1/(k+1)!) x^k sum_{i=1}^{k} C(k+1,i) f^(k+1-i) g^(i).
Polynomial sd_product_rule_rhs(const Polynomial& f, const Polynomial& g, int d);

/// Touchard polynomial T_n(x) = sum_i S2(n,i) x^i.
Polynomial touchard_polynomial(long n);

/// sum_{k=0}^{d-1} C(d-1,k) x^k/(k+1)!, the Kummer value 1F1(1-d; 2; -x).
Polynomial kummer_polynomial(int d);

/// (1/d!) sum_{k=0}^{d} s1(d,k) T_k(x), divided by x. The quotient must be a
/// polynomial (zero constant term); a nonzero constant term raises
/// std::logic_error. Equals kummer_polynomial(d).
Polynomial kummer_touchard_rhs(int d);

/// Bivariate d-Hoggatt polynomial sum_k hoggatt(d,n,k) x^(n-k) y^k; 1 at n = 0.
BivariatePolynomial bivariate_hoggatt(int d, long n);

/// S_d-derivative in x of a bivariate polynomial (y treated as a constant).
BivariatePolynomial sd_derivative_x(const BivariatePolynomial& p, int d);

/// Generic Hoggatt translation of a polynomial family:
///   sum_{k=0}^{n} hoggatt(d,n,k) family[k](x) y^(n-k).
/// Requires family to provide p_0..p_n.
Polynomial hoggatt_translate(std::span<const Polynomial> family, int d, long n, const Rational& y);

}  // namespace sdcalc
