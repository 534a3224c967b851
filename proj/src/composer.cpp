#include "ramseg/composer.hpp"

#include <string>

namespace ramseg {

namespace {

constexpr int kMaxHalvings = 64;

Rational l1_length(const NumericSegment& s) { return (s.right.x - s.left.x).abs() + (s.right.y - s.left.y).abs(); }

// Starting guest radius: 1/16 of the smallest nonzero endpoint-to-line gap
// of the host (|a x + b y + c| / (|a| + |b|), a lower bound on the
// Euclidean distance), measured in units of the longest host segment and
// rounded down to a power of two.
Rational initial_guest_radius(const NumericArrangement& host) {
    Rational radius(1, 16);
    Rational longest;
    for (const auto& s : host) longest = max(longest, l1_length(s));
    for (std::size_t i = 0; i < host.size(); ++i) {
        const auto line = line_coefficients(host[i]);
        const Rational norm = line.a.abs() + line.b.abs();
        for (std::size_t j = 0; j < host.size(); ++j) {
            if (i == j) continue;
            for (const auto* p : {&host[j].left, &host[j].right}) {
                Rational gap = line.eval(*p).abs() / norm;
                if (!gap.is_zero()) radius = min(radius, gap / (longest * 16));
            }
        }
    }
    return power_of_two_at_most(radius);
}

// Orientation-preserving similarity with (0,0) -> s.left, (1,0) -> s.right.
NumericPoint map_into(const NumericSegment& s, const NumericPoint& p) {
    const Rational ux = s.right.x - s.left.x;
    const Rational uy = s.right.y - s.left.y;
    return {s.left.x + p.x * ux - p.y * uy, s.left.y + p.x * uy + p.y * ux};
}

NumericArrangement place_copies(const NumericArrangement& host, const NumericArrangement& guest) {
    NumericArrangement out;
    out.reserve(host.size() * guest.size());
    for (const auto& h : host)
        for (const auto& g : guest) out.push_back({map_into(h, g.left), map_into(h, g.right)});
    return out;
}

}  // namespace

FlatteningSpec::FlatteningSpec(Rational radius) : radius_(std::move(radius)) {
    if (radius_.sign() <= 0 || radius_ >= Rational(1, 2))
        throw CompositionError("flattening radius must lie in (0, 1/2), got " + radius_.str());
}

Rational find_valid_epsilon(const SymbolicArrangement& arr) {
    Rational bound(1);
    std::vector<LineCoeffs<EpsPolynomial>> lines;
    lines.reserve(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const EpsPolynomial run = arr[i].right.x - arr[i].left.x;
        if (run.sign_near_zero() <= 0)
            throw CompositionError("segment " + std::to_string(i + 1) + ": right endpoint is not to the right");
        bound = min(bound, run.small_epsilon_bound());
        lines.push_back(line_coefficients(arr[i]));
    }
    for (std::size_t i = 0; i < arr.size(); ++i) {
        for (std::size_t j = 0; j < arr.size(); ++j) {
            if (i == j) continue;
            const EpsPolynomial at_left = lines[i].eval(arr[j].left);
            const EpsPolynomial at_right = lines[i].eval(arr[j].right);
            const EpsPolynomial d = at_left * at_right;
            if (!d.is_zero()) {
                bound = min(bound, d.small_epsilon_bound());
                continue;
            }
            if (at_left.is_zero() && at_right.is_zero())
                throw CompositionError("segments " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                       " are collinear for every eps");
            // A vanishing product still needs its other factor to keep its
            // sign, or the numeric test could see a spurious collinearity.
            bound = min(bound, (at_left.is_zero() ? at_right : at_left).small_epsilon_bound());
        }
    }
    return bound / 2;
}

GuestFamily family_from_symbolic(SymbolicArrangement arr, bool general_position) {
    const Rational valid = find_valid_epsilon(arr);
    return [arr = std::move(arr), valid, general_position](const FlatteningSpec& spec) {
        const Rational& r = spec.radius();
        Rational eps = min(valid, r / 2);
        for (int i = 0; i <= kMaxHalvings; ++i, eps /= 2) {
            NumericArrangement inst = instantiate(arr, eps);
            if (general_position) inst = perturb_to_general_position(inst, r / 16).arrangement;
            if (is_flattened_within(inst, r)) return inst;
        }
        throw CompositionError("arrangement does not flatten to radius " + r.str());
    };
}

SubstitutionResult substitute(const NumericArrangement& host, const GuestFamily& guest) {
    if (host.empty()) throw CompositionError("substitute: empty host");
    const LabeledGraph host_graph = intersection_graph(host);
    Rational radius = initial_guest_radius(host);
    for (int halvings = 0; halvings <= kMaxHalvings; ++halvings, radius /= 2) {
        const NumericArrangement copy = guest(FlatteningSpec(radius));
        if (!is_flattened_within(copy, radius))
            throw CompositionError("guest family returned an arrangement not flattened within " + radius.str());
        const LabeledGraph expected = lex_product(host_graph, intersection_graph(copy));
        NumericArrangement placed = place_copies(host, copy);
        LabeledGraph graph = intersection_graph(placed);
        if (graph == expected) return {std::move(placed), std::move(graph), radius, halvings};
    }
    throw CompositionError("substitution did not realise the lexicographic product after 64 halvings");
}

GuestFamily composed_family(GuestFamily host, GuestFamily guest) {
    return [host = std::move(host), guest = std::move(guest)](const FlatteningSpec& spec) {
        Rational host_radius = spec.radius() / 2;
        for (int i = 0; i <= kMaxHalvings; ++i, host_radius /= 2) {
            SubstitutionResult composed = substitute(host(FlatteningSpec(host_radius)), guest);
            if (is_flattened_within(composed.arrangement, spec.radius())) return std::move(composed.arrangement);
        }
        throw CompositionError("composed arrangement does not flatten to radius " + spec.radius().str());
    };
}

M0Result build_m0() {
    const SymbolicArrangement ma = build_ma();
    const Rational eps = find_valid_epsilon(ma);
    const NumericArrangement host = perturb_to_general_position(instantiate(ma, eps)).arrangement;
    SubstitutionResult sub = substitute(host, family_from_symbolic(build_mb()));
    return {std::move(sub.arrangement), std::move(sub.graph), eps, sub.guest_radius};
}

GuestFamily m0_family() {
    return composed_family(family_from_symbolic(build_ma(), true), family_from_symbolic(build_mb(), true));
}

NumericArrangement compose_geometry(unsigned levels, std::size_t segment_cap) {
    constexpr std::size_t kM0Size = 169;
    std::size_t count = kM0Size;
    for (unsigned level = 1; level <= levels; ++level) {
        if (count > segment_cap / kM0Size)
            throw CapExceeded("segment cap " + std::to_string(segment_cap) + " exceeded at level " +
                              std::to_string(level));
        count *= kM0Size;
    }
    if (count > segment_cap)
        throw CapExceeded("segment cap " + std::to_string(segment_cap) + " exceeded at level 0");
    NumericArrangement current = build_m0().arrangement;
    for (unsigned level = 1; level <= levels; ++level) current = substitute(current, m0_family()).arrangement;
    return current;
}

LabeledGraph iterate_graph(const LabeledGraph& g0, unsigned levels, std::size_t vertex_cap) {
    const std::size_t base = g0.vertex_count();
    std::size_t count = base;
    if (count > vertex_cap) throw CapExceeded("vertex cap " + std::to_string(vertex_cap) + " exceeded at level 0");
    for (unsigned level = 1; level <= levels; ++level) {
        if (base != 0 && count > vertex_cap / base)
            throw CapExceeded("vertex cap " + std::to_string(vertex_cap) + " exceeded at level " +
                              std::to_string(level));
        count *= base;
    }
    LabeledGraph g = g0;
    for (unsigned level = 1; level <= levels; ++level) g = lex_product(g, g0);
    return g;
}

RamseyProfile ramsey_profile(const LabeledGraph& g, std::size_t guard) {
    if (g.vertex_count() > guard)
        throw CapExceeded("graph has " + std::to_string(g.vertex_count()) + " vertices (guard " +
                          std::to_string(guard) +
                          "); use the product identity omega(G[H]) = omega(G) * omega(H) instead");
    return {g.vertex_count(), max_clique(g).size, max_independent_set(g).size};
}

}  // namespace ramseg
