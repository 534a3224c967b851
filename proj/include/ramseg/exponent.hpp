#ifndef RAMSEG_EXPONENT_HPP
#define RAMSEG_EXPONENT_HPP

#include "ramseg/rational.hpp"

namespace ramseg {

/// log(n0) / log(k0) with an exactly certified open rational enclosure
/// lower < log(n0)/log(k0) < upper.
struct ExponentEnclosure {
    double value = 0;
    Rational lower;
    Rational upper;
};

/// Exact test of log(n0)/log(k0) > q, i.e. n0^den(q) > k0^num(q).
bool exponent_exceeds(unsigned long n0, unsigned long k0, const Rational& q);

/// Exact test of log(n0)/log(k0) < q.
bool exponent_below(unsigned long n0, unsigned long k0, const Rational& q);

/// Exponent of the lower bound r(k) >= k^(log n0 / log k0) obtained by
/// iterating a starting arrangement of n0 segments with at most k0 pairwise
/// crossing or disjoint ones. The enclosure has width 10^-digits.
/// Requires n0, k0 >= 2.
ExponentEnclosure lower_bound_exponent(unsigned long n0, unsigned long k0, unsigned digits = 6);

}  // namespace ramseg

#endif
