#include "heunfact/rational.hpp"

#include "heunfact/errors.hpp"

namespace heunfact {

Rational::Rational(long num, long den) {
    if (den == 0) {
        throw DivisionByZero("rational with zero denominator");
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
    if (value_.get_den() == 0) {
        throw DivisionByZero("rational with zero denominator");
    }
    value_.canonicalize();
}

Rational Rational::from_integer_string(std::string_view digits) {
    mpz_class z;
    if (z.set_str(std::string(digits), 10) != 0) {
        throw InvalidInput("not an integer literal: " + std::string(digits));
    }
    return Rational(mpq_class(z));
}

Rational Rational::abs() const {
    Rational r = *this;
    r.value_ = ::abs(value_);
    return r;
}

Rational Rational::pow(unsigned exponent) const {
    mpz_class num;
    mpz_class den;
    mpz_pow_ui(num.get_mpz_t(), value_.get_num().get_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), value_.get_den().get_mpz_t(), exponent);
    return Rational(mpq_class(num, den));
}

std::string Rational::str() const { return value_.get_str(10); }

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) {
        throw DivisionByZero("rational division by zero");
    }
    value_ /= rhs.value_;
    return *this;
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.value_ = -value_;
    return r;
}

Rational rational_gcd(const Rational& a, const Rational& b) {
    if (a.is_zero()) {
        return b.abs();
    }
    if (b.is_zero()) {
        return a.abs();
    }
    mpz_class num;
    mpz_class den;
    mpz_gcd(num.get_mpz_t(), a.value().get_num().get_mpz_t(), b.value().get_num().get_mpz_t());
    mpz_lcm(den.get_mpz_t(), a.value().get_den().get_mpz_t(), b.value().get_den().get_mpz_t());
    return Rational(mpq_class(num, den));
}

} // namespace heunfact
