#include "ramseg/exponent.hpp"

#include <cmath>
#include <stdexcept>

namespace ramseg {

namespace {

void require_bases(unsigned long n0, unsigned long k0) {
    if (n0 < 2 || k0 < 2) throw std::invalid_argument("lower_bound_exponent needs n0, k0 >= 2");
}

// Sign of n0^den - k0^num for q = num/den > 0; q <= 0 is always exceeded.
int compare_powers(unsigned long n0, unsigned long k0, const Rational& q) {
    if (q.sign() <= 0) return 1;
    const mpz_class num = q.numerator();
    const mpz_class den = q.denominator();
    if (!num.fits_ulong_p() || !den.fits_ulong_p()) throw std::overflow_error("exponent certificate too large");
    mpz_class lhs, rhs;
    mpz_ui_pow_ui(lhs.get_mpz_t(), n0, den.get_ui());
    mpz_ui_pow_ui(rhs.get_mpz_t(), k0, num.get_ui());
    return sgn(lhs - rhs);
}

}  // namespace

bool exponent_exceeds(unsigned long n0, unsigned long k0, const Rational& q) {
    require_bases(n0, k0);
    return compare_powers(n0, k0, q) > 0;
}

bool exponent_below(unsigned long n0, unsigned long k0, const Rational& q) {
    require_bases(n0, k0);
    return compare_powers(n0, k0, q) < 0;
}

ExponentEnclosure lower_bound_exponent(unsigned long n0, unsigned long k0, unsigned digits) {
    require_bases(n0, k0);
    ExponentEnclosure out;
    out.value = std::log(static_cast<double>(n0)) / std::log(static_cast<double>(k0));

    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    const Rational unit(mpq_class(mpz_class(1), scale));
    const mpz_class ticks(std::floor(out.value * scale.get_d()));

    out.lower = Rational(ticks) * unit;
    while (!exponent_exceeds(n0, k0, out.lower)) out.lower -= unit;
    out.upper = out.lower + unit;
    while (!exponent_below(n0, k0, out.upper)) out.upper += unit;
    return out;
}

}  // namespace ramseg
