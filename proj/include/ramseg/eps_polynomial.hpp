#ifndef RAMSEG_EPS_POLYNOMIAL_HPP
#define RAMSEG_EPS_POLYNOMIAL_HPP

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "ramseg/rational.hpp"

namespace ramseg {

/// One monomial coeff * eps^degree.
struct EpsTerm {
    unsigned degree = 0;
    Rational coeff;

    friend bool operator==(const EpsTerm&, const EpsTerm&) = default;
};

/// Sparse univariate polynomial in the flattening parameter eps.
///
/// Terms are kept sorted by strictly increasing degree with no zero
/// coefficients, so the zero polynomial is the empty term list and the
/// lowest-order term (which decides the sign for small positive eps) is
/// always `terms().front()`.
class EpsPolynomial {
public:
    EpsPolynomial() = default;
    EpsPolynomial(long constant) : EpsPolynomial(Rational(constant)) {}  // NOLINT
    EpsPolynomial(const Rational& constant);                             // NOLINT

    /// Builds from arbitrary (degree, coeff) pairs; duplicates are merged
    /// and zero coefficients dropped.
    explicit EpsPolynomial(std::vector<EpsTerm> terms);

    static EpsPolynomial monomial(unsigned degree, const Rational& coeff = 1);
    static EpsPolynomial epsilon() { return monomial(1); }

    const std::vector<EpsTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].degree == 0); }
    unsigned degree() const { return terms_.empty() ? 0 : terms_.back().degree; }
    Rational constant_term() const;

    /// Sign taken for every eps in some interval (0, B): the sign of the
    /// lowest-order nonzero coefficient, 0 for the zero polynomial.
    int sign_near_zero() const;

    Rational eval_at(const Rational& eps) const;

    /// B = min(1, |a_k| / S), a_k the lowest-order coefficient and S the
    /// sum of the absolute values of all higher coefficients (B = 1 if S = 0).
    /// For every 0 < eps < B the value p(eps) has sign sign_near_zero().
    /// Throws ArithmeticError on the zero polynomial.
    Rational small_epsilon_bound() const;

    /// Ascending "c*e^d" rendering, for diagnostics.
    std::string str() const;

    EpsPolynomial& operator+=(const EpsPolynomial& rhs);
    EpsPolynomial& operator-=(const EpsPolynomial& rhs);
    EpsPolynomial& operator*=(const EpsPolynomial& rhs);

    friend EpsPolynomial operator+(EpsPolynomial lhs, const EpsPolynomial& rhs) { return lhs += rhs; }
    friend EpsPolynomial operator-(EpsPolynomial lhs, const EpsPolynomial& rhs) { return lhs -= rhs; }
    friend EpsPolynomial operator*(const EpsPolynomial& lhs, const EpsPolynomial& rhs);
    EpsPolynomial operator-() const;

    friend bool operator==(const EpsPolynomial&, const EpsPolynomial&) = default;

private:
    EpsPolynomial merged_with(const EpsPolynomial& rhs, bool subtract) const;

    std::vector<EpsTerm> terms_;
};

EpsPolynomial pow(const EpsPolynomial& base, unsigned exponent);

inline int sign_of(const EpsPolynomial& p) { return p.sign_near_zero(); }

std::ostream& operator<<(std::ostream& os, const EpsPolynomial& p);

}  // namespace ramseg

#endif
