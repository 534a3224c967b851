#ifndef RAMSEG_COMPOSER_HPP
#define RAMSEG_COMPOSER_HPP

#include <functional>
#include <stdexcept>

#include "ramseg/catalog.hpp"
#include "ramseg/geometry.hpp"
#include "ramseg/graph.hpp"

namespace ramseg {

class CompositionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when a requested construction would exceed a size cap.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Discs of radius `radius` around (0,0) and (1,0).
class FlatteningSpec {
public:
    explicit FlatteningSpec(Rational radius);
    const Rational& radius() const { return radius_; }

private:
    Rational radius_;
};

/// Half of the smallest small_epsilon_bound over every nonzero side product
/// d(i,j) and every r_x - l_x. Every eps in (0, 2 * result) realises the
/// symbolic intersection graph with correct left/right orientation.
/// Throws CompositionError if two segments are collinear for all eps.
Rational find_valid_epsilon(const SymbolicArrangement& arr);

/// Source of flattened copies: for a flattening spec it returns an
/// arrangement with every endpoint inside the corresponding disc, and the
/// intersection graph does not depend on the radius.
using GuestFamily = std::function<NumericArrangement(const FlatteningSpec&)>;

/// Family backed by a symbolic arrangement: instantiates at
/// eps = min(valid epsilon, r/2), halving eps until flattened within r.
/// With `general_position` each instance is also perturbed (initial step
/// r/16) so that all contacts are proper crossings.
GuestFamily family_from_symbolic(SymbolicArrangement arr, bool general_position = false);

/// Family of substituted arrangements: the host is drawn at a radius small
/// enough that the composed copies still fit in the requested discs.
GuestFamily composed_family(GuestFamily host, GuestFamily guest);

struct SubstitutionResult {
    NumericArrangement arrangement;
    LabeledGraph graph;
    Rational guest_radius;
    int halvings = 0;
};

/// Replaces every host segment by the image of a flattened guest under the
/// orientation-preserving similarity taking (0,0) to its left endpoint and
/// (1,0) to its right endpoint. Segment (i, j) gets index (i-1)*|guest| + j.
/// The guest radius is halved until the exact intersection graph equals
/// lex_product(G(host), G(guest)); throws CompositionError after 64 halvings.
SubstitutionResult substitute(const NumericArrangement& host, const GuestFamily& guest);

struct M0Result {
    NumericArrangement arrangement;
    LabeledGraph graph;
    Rational host_epsilon;
    Rational guest_radius;
};

/// M_a at its valid epsilon, perturbed into general position, with a
/// flattened M_b substituted into every segment: 169 segments. Contacts
/// inside one copy of M_b are kept exactly as in the table (shared
/// endpoints included); every contact between copies is a proper crossing.
M0Result build_m0();

/// Flattened family of M0 copies, in general position.
GuestFamily m0_family();

/// Geometric recursion: level 0 is build_m0(), level i substitutes a
/// flattened M0 into every segment of level i-1. Throws CapExceeded if the
/// segment count would exceed `segment_cap`.
NumericArrangement compose_geometry(unsigned levels, std::size_t segment_cap = 28'561);

/// G_0 = g0, G_i = lex_product(G_{i-1}, g0). Throws CapExceeded if the
/// vertex count of some level would exceed `vertex_cap`.
LabeledGraph iterate_graph(const LabeledGraph& g0, unsigned levels, std::size_t vertex_cap = 1'000'000);

/// Exact (n, clique number, independence number). Throws CapExceeded above
/// `guard` vertices; use the multiplicative lex-product identity instead.
RamseyProfile ramsey_profile(const LabeledGraph& g, std::size_t guard = 10'000);

}  // namespace ramseg

#endif
