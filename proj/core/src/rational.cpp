#include "sdcalc/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace sdcalc {

Rational::Rational(const Integer& numerator, const Integer& denominator) {
    if (sgn(denominator) == 0) {
        throw std::domain_error("Rational: zero denominator");
    }
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational::Rational(long numerator, long denominator)
    : Rational(Integer(numerator), Integer(denominator)) {}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
        throw std::domain_error("Rational: division by zero");
    }
    value_ /= o.value_;
    return *this;
}

Rational Rational::operator-() const {
    Rational r;
    r.value_ = -value_;
    return r;
}

Rational Rational::parse(std::string_view text) {
    auto malformed = [&] {
        return std::domain_error("Rational: malformed literal '" + std::string(text) + "'");
    };
    auto parse_int = [&](std::string_view s, bool allow_sign) -> Integer {
        if (s.empty()) throw malformed();
        bool negative = false;
        std::size_t i = 0;
        if (allow_sign && (s[0] == '-' || s[0] == '+')) {
            negative = s[0] == '-';
            i = 1;
        }
        if (i == s.size()) throw malformed();
        for (std::size_t j = i; j < s.size(); ++j) {
            if (!std::isdigit(static_cast<unsigned char>(s[j]))) throw malformed();
        }
        const Integer magnitude(std::string(s.substr(i)), 10);
        return negative ? Integer(-magnitude) : magnitude;
    };

    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_int(text, true));
    }
    const Integer num = parse_int(text.substr(0, slash), true);
    const Integer den = parse_int(text.substr(slash + 1), false);
    if (sgn(den) == 0) throw malformed();
    return Rational(num, den);
}

std::string Rational::str() const {
    return value_.get_str();
}

std::string Rational::decimal(int digits) const {
    if (digits < 0) {
        throw std::domain_error("Rational: negative digit count");
    }
    Integer num = abs(numerator());
    const Integer den = denominator();
    Integer whole = num / den;
    Integer rem = num % den;
    std::string out = sign() < 0 ? "-" : "";
    out += whole.get_str();
    if (digits > 0) {
        Integer scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
        Integer frac = (rem * scale) / den;  // truncation toward zero
        std::string fs = frac.get_str();
        out += '.';
        out += std::string(static_cast<std::size_t>(digits) - fs.size(), '0');
        out += fs;
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

Integer int_pow(const Integer& base, long exp) {
    if (exp < 0) {
        throw std::domain_error("int_pow: negative exponent");
    }
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exp));
    return r;
}

Rational pow(const Rational& base, long exp) {
    if (exp < 0) {
        if (base.is_zero()) throw std::domain_error("pow: zero base, negative exponent");
        return Rational(1) / pow(base, -exp);
    }
    return Rational(int_pow(base.numerator(), exp), int_pow(base.denominator(), exp));
}

}  // namespace sdcalc
