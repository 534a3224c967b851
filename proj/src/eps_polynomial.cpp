#include "ramseg/eps_polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace ramseg {

EpsPolynomial::EpsPolynomial(const Rational& constant) {
    if (!constant.is_zero()) terms_.push_back({0, constant});
}

EpsPolynomial::EpsPolynomial(std::vector<EpsTerm> terms) {
    std::stable_sort(terms.begin(), terms.end(),
                     [](const EpsTerm& a, const EpsTerm& b) { return a.degree < b.degree; });
    for (auto& t : terms) {
        if (!terms_.empty() && terms_.back().degree == t.degree)
            terms_.back().coeff += t.coeff;
        else
            terms_.push_back(std::move(t));
        if (terms_.back().coeff.is_zero()) terms_.pop_back();
    }
}

EpsPolynomial EpsPolynomial::monomial(unsigned degree, const Rational& coeff) {
    EpsPolynomial p;
    if (!coeff.is_zero()) p.terms_.push_back({degree, coeff});
    return p;
}

Rational EpsPolynomial::constant_term() const {
    if (!terms_.empty() && terms_.front().degree == 0) return terms_.front().coeff;
    return 0;
}

int EpsPolynomial::sign_near_zero() const { return terms_.empty() ? 0 : terms_.front().coeff.sign(); }

Rational EpsPolynomial::eval_at(const Rational& eps) const {
    // Horner over the sparse terms, from the highest degree down.
    Rational acc;
    unsigned current = degree();
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        acc *= pow(eps, current - it->degree);
        acc += it->coeff;
        current = it->degree;
    }
    return acc * pow(eps, current);
}

Rational EpsPolynomial::small_epsilon_bound() const {
    if (terms_.empty()) throw ArithmeticError("small_epsilon_bound of the zero polynomial");
    Rational tail;
    for (std::size_t i = 1; i < terms_.size(); ++i) tail += terms_[i].coeff.abs();
    if (tail.is_zero()) return 1;
    return min(Rational(1), terms_.front().coeff.abs() / tail);
}

std::string EpsPolynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        if (!first) os << (t.coeff.sign() < 0 ? " - " : " + ");
        else if (t.coeff.sign() < 0) os << "-";
        first = false;
        Rational mag = t.coeff.abs();
        if (t.degree == 0) {
            os << mag;
            continue;
        }
        if (mag != Rational(1)) os << mag << "*";
        os << "e";
        if (t.degree > 1) os << "^" << t.degree;
    }
    return os.str();
}

EpsPolynomial EpsPolynomial::merged_with(const EpsPolynomial& rhs, bool subtract) const {
    EpsPolynomial out;
    out.terms_.reserve(terms_.size() + rhs.terms_.size());
    auto a = terms_.begin();
    auto b = rhs.terms_.begin();
    auto take_rhs = [&](const EpsTerm& t) {
        out.terms_.push_back(subtract ? EpsTerm{t.degree, -t.coeff} : t);
    };
    while (a != terms_.end() || b != rhs.terms_.end()) {
        if (b == rhs.terms_.end() || (a != terms_.end() && a->degree < b->degree)) {
            out.terms_.push_back(*a++);
        } else if (a == terms_.end() || b->degree < a->degree) {
            take_rhs(*b++);
        } else {
            Rational c = subtract ? a->coeff - b->coeff : a->coeff + b->coeff;
            if (!c.is_zero()) out.terms_.push_back({a->degree, std::move(c)});
            ++a;
            ++b;
        }
    }
    return out;
}

EpsPolynomial& EpsPolynomial::operator+=(const EpsPolynomial& rhs) { return *this = merged_with(rhs, false); }

EpsPolynomial& EpsPolynomial::operator-=(const EpsPolynomial& rhs) { return *this = merged_with(rhs, true); }

EpsPolynomial& EpsPolynomial::operator*=(const EpsPolynomial& rhs) { return *this = *this * rhs; }

EpsPolynomial operator*(const EpsPolynomial& lhs, const EpsPolynomial& rhs) {
    std::vector<EpsTerm> products;
    products.reserve(lhs.terms_.size() * rhs.terms_.size());
    for (const auto& a : lhs.terms_)
        for (const auto& b : rhs.terms_) products.push_back({a.degree + b.degree, a.coeff * b.coeff});
    return EpsPolynomial(std::move(products));
}

EpsPolynomial EpsPolynomial::operator-() const {
    EpsPolynomial out = *this;
    for (auto& t : out.terms_) t.coeff = -t.coeff;
    return out;
}

EpsPolynomial pow(const EpsPolynomial& base, unsigned exponent) {
    EpsPolynomial result(1);
    for (unsigned i = 0; i < exponent; ++i) result *= base;
    return result;
}

std::ostream& operator<<(std::ostream& os, const EpsPolynomial& p) { return os << p.str(); }

}  // namespace ramseg
