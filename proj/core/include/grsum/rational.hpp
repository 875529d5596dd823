#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace grsum {

using Integer = mpz_class;

/// Parses a base-10 integer with optional sign. Throws InvalidArgument.
Integer parse_integer(std::string_view text);

/**
 * Exact rational number in canonical form: gcd(|num|, den) = 1 and den > 0.
 *
 * Backed by GMP's mpq_class. Every constructor canonicalizes, and GMP keeps
 * results of arithmetic canonical, so equality is structural.
 */
class Rational {
public:
    Rational() = default;
    Rational(int v) : value_(v) {}
    Rational(long v) : value_(v) {}
    Rational(unsigned v) : value_(v) {}
    Rational(unsigned long v) : value_(v) {}
    Rational(long long v) : value_(Integer(std::to_string(v))) {}
    Rational(const Integer& v) : value_(v) {}
    Rational(const Integer& num, const Integer& den);

    /// Accepts "a" or "a/b"; the result is canonicalized.
    static Rational parse(std::string_view text);

    Integer numerator() const { return value_.get_num(); }
    Integer denominator() const { return value_.get_den(); }

    bool is_integer() const { return value_.get_den() == 1; }
    bool is_zero() const { return sgn(value_) == 0; }
    int sign() const { return sgn(value_); }
    double to_double() const { return value_.get_d(); }

    /// Integer rendered as plain decimal, otherwise "num/den".
    std::string str() const;

    Rational abs() const;

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    const mpq_class& raw() const { return value_; }

private:
    explicit Rational(mpq_class v) : value_(std::move(v)) {}

    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace grsum
