#ifndef RAMSEG_RATIONAL_HPP
#define RAMSEG_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ramseg {

/// Raised by exact arithmetic on an undefined operation (division by zero,
/// malformed literal).
class ArithmeticError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Exact arbitrary-precision fraction, always kept in lowest terms with a
/// positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(long numerator, long denominator);
    explicit Rational(const mpz_class& integer) : value_(integer) {}
    explicit Rational(mpq_class value);

    /// Accepts "p/q" or "p" with an optional leading '-'.
    static Rational parse(std::string_view text);

    const mpq_class& raw() const { return value_; }
    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }
    Rational abs() const;
    double to_double() const { return value_.get_d(); }

    /// "p/q", or "p" when the denominator is one.
    std::string str() const;

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    mpq_class value_;
};

/// Quotient as a value; empty when the divisor is zero.
std::optional<Rational> checked_divide(const Rational& a, const Rational& b);

Rational pow(const Rational& base, unsigned exponent);

/// Largest 2^-k (k >= 0) not exceeding x, for 0 < x; 1 when x >= 1.
Rational power_of_two_at_most(const Rational& x);
const Rational& min(const Rational& a, const Rational& b);
const Rational& max(const Rational& a, const Rational& b);

inline int sign_of(const Rational& r) { return r.sign(); }

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace ramseg

#endif
