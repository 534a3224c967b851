#include "ramseg/rational.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

namespace ramseg {

namespace {

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && s.front() == '-') s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

bool is_natural_literal(std::string_view s) { return !s.empty() && s.front() != '-' && is_integer_literal(s); }

}  // namespace

Rational::Rational(long numerator, long denominator) {
    if (denominator == 0) throw ArithmeticError("rational with zero denominator");
    value_ = mpq_class(numerator, 1) / mpq_class(denominator, 1);
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
    if (value_.get_den() == 0) throw ArithmeticError("rational with zero denominator");
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_natural_literal(den))
        throw ArithmeticError("malformed rational literal '" + std::string(text) + "'");
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw ArithmeticError("rational with zero denominator: '" + std::string(text) + "'");
    mpq_class q(n, d);
    q.canonicalize();
    return Rational(std::move(q));
}

Rational Rational::abs() const {
    Rational r;
    r.value_ = ::abs(value_);
    return r;
}

std::string Rational::str() const {
    if (value_.get_den() == 1) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

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
    if (rhs.is_zero()) throw ArithmeticError("division by zero");
    value_ /= rhs.value_;
    return *this;
}

Rational Rational::operator-() const {
    Rational r;
    r.value_ = -value_;
    return r;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::optional<Rational> checked_divide(const Rational& a, const Rational& b) {
    if (b.is_zero()) return std::nullopt;
    return a / b;
}

Rational pow(const Rational& base, unsigned exponent) {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), exponent);
    return Rational(mpq_class(num, den));
}

Rational power_of_two_at_most(const Rational& x) {
    if (x.sign() <= 0) throw ArithmeticError("power_of_two_at_most needs a positive argument");
    if (x >= Rational(1)) return 1;
    const long num_bits = static_cast<long>(mpz_sizeinbase(x.raw().get_num_mpz_t(), 2));
    const long den_bits = static_cast<long>(mpz_sizeinbase(x.raw().get_den_mpz_t(), 2));
    unsigned long k = static_cast<unsigned long>(std::max(0L, den_bits - num_bits - 1));
    auto candidate = [](unsigned long e) {
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), 2, e);
        return Rational(mpq_class(mpz_class(1), den));
    };
    while (candidate(k) > x) ++k;
    return candidate(k);
}

const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace ramseg
