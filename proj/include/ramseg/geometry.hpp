#ifndef RAMSEG_GEOMETRY_HPP
#define RAMSEG_GEOMETRY_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ramseg/eps_polynomial.hpp"
#include "ramseg/graph.hpp"
#include "ramseg/rational.hpp"

namespace ramseg {

class GeometryError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Coordinates are either exact rationals (a concrete arrangement) or
// polynomials in eps (an arrangement family, compared "for all small eps").
// The predicates below are written once against sign_of() and work for both.

template <class T>
struct Point {
    T x;
    T y;

    friend bool operator==(const Point&, const Point&) = default;
};

template <class T>
struct Segment {
    Point<T> left;
    Point<T> right;

    friend bool operator==(const Segment&, const Segment&) = default;
};

template <class T>
using Arrangement = std::vector<Segment<T>>;

using NumericPoint = Point<Rational>;
using NumericSegment = Segment<Rational>;
using NumericArrangement = Arrangement<Rational>;
using SymbolicSegment = Segment<EpsPolynomial>;
using SymbolicArrangement = Arrangement<EpsPolynomial>;

/// Line a*x + b*y + c = 0.
template <class T>
struct LineCoeffs {
    T a;
    T b;
    T c;

    T eval(const Point<T>& p) const { return a * p.x + b * p.y + c; }
};

template <class T>
bool is_degenerate(const Segment<T>& s) {
    return sign_of(s.right.x - s.left.x) == 0 && sign_of(s.right.y - s.left.y) == 0;
}

/// Line through both endpoints: a = r_y - l_y, b = l_x - r_x,
/// c = r_x*l_y - l_x*r_y. Throws GeometryError for a degenerate segment.
template <class T>
LineCoeffs<T> line_coefficients(const Segment<T>& s) {
    if (is_degenerate(s)) throw GeometryError("degenerate segment: endpoints coincide");
    return {s.right.y - s.left.y, s.left.x - s.right.x, s.right.x * s.left.y - s.left.x * s.right.y};
}

/// Product of the line equation evaluated at both endpoints of `t`;
/// nonpositive iff `t` meets the line.
template <class T>
T side_product(const LineCoeffs<T>& line, const Segment<T>& t) {
    return line.eval(t.left) * line.eval(t.right);
}

namespace detail {

template <class T>
int compare(const T& a, const T& b) {
    return sign_of(a - b);
}

template <class T>
const T& lesser(const T& a, const T& b) {
    return compare(b, a) < 0 ? b : a;
}

template <class T>
const T& greater(const T& a, const T& b) {
    return compare(a, b) < 0 ? b : a;
}

// Both segments lie on one line: they meet iff their projections onto an
// axis the line is not perpendicular to overlap.
template <class T>
bool collinear_overlap(const Segment<T>& s, const Segment<T>& t) {
    const bool use_x = sign_of(s.right.x - s.left.x) != 0;
    auto lo = [&](const Segment<T>& u) -> const T& {
        return use_x ? lesser(u.left.x, u.right.x) : lesser(u.left.y, u.right.y);
    };
    auto hi = [&](const Segment<T>& u) -> const T& {
        return use_x ? greater(u.left.x, u.right.x) : greater(u.left.y, u.right.y);
    };
    return compare(greater(lo(s), lo(t)), lesser(hi(s), hi(t))) <= 0;
}

}  // namespace detail

/// Closed-segment intersection test given precomputed supporting lines.
template <class T>
bool segments_intersect(const Segment<T>& s, const LineCoeffs<T>& line_s, const Segment<T>& t,
                        const LineCoeffs<T>& line_t) {
    const int st = sign_of(side_product(line_s, t));
    if (st > 0) return false;
    const int ts = sign_of(side_product(line_t, s));
    if (ts > 0) return false;
    if (st == 0 && ts == 0 && sign_of(line_s.eval(t.left)) == 0 && sign_of(line_s.eval(t.right)) == 0)
        return detail::collinear_overlap(s, t);
    return true;
}

/// Closed segments s and t share a point (touching counts). For polynomial
/// coordinates the answer holds for all sufficiently small eps > 0.
template <class T>
bool segments_intersect(const Segment<T>& s, const Segment<T>& t) {
    return segments_intersect(s, line_coefficients(s), t, line_coefficients(t));
}

/// Graph on 1..n with {i, j} an edge iff segments i and j intersect.
template <class T>
LabeledGraph intersection_graph(const Arrangement<T>& arr) {
    std::vector<LineCoeffs<T>> lines;
    lines.reserve(arr.size());
    for (const auto& s : arr) lines.push_back(line_coefficients(s));
    LabeledGraph g(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i)
        for (std::size_t j = i + 1; j < arr.size(); ++j)
            if (segments_intersect(arr[i], lines[i], arr[j], lines[j])) g.add_edge(i + 1, j + 1);
    return g;
}

/// Concrete arrangement at eps = `eps`.
NumericArrangement instantiate(const SymbolicArrangement& arr, const Rational& eps);
NumericSegment instantiate(const SymbolicSegment& s, const Rational& eps);

// ---------------------------------------------------------------------------
// General position

struct PositionViolation {
    enum class Kind { CoincidentEndpoints, CollinearEndpoints, EndpointOnSegment };
    Kind kind;
    /// Endpoint ids: 2*(i-1) is the left endpoint of segment i, 2*(i-1)+1
    /// the right one. For EndpointOnSegment, `endpoints` holds the endpoint
    /// and `segment` the 1-based segment it lies on.
    std::vector<std::size_t> endpoints;
    std::size_t segment = 0;

    std::string describe() const;
};

/// Empty iff no two endpoints of different segments coincide, no three
/// endpoints are collinear, and no endpoint lies on another segment.
std::vector<PositionViolation> general_position_check(const NumericArrangement& arr);

struct PerturbationResult {
    NumericArrangement arrangement;
    /// Relative step of the accepted attempt; zero when the input was
    /// already in general position and returned unchanged.
    Rational step;
    int halvings = 0;
};

/// Moves endpoints slightly so that general_position_check is empty while
/// the intersection graph is preserved. Each segment is stretched by a
/// fraction `step` beyond both ends (so touching contacts become proper
/// crossings). Segments sharing a supporting line are then sheared apart
/// with slopes that are distinct powers of `step`. Finally endpoint k is
/// shifted by step^m * diam * (k+1, (k+1)^2), with m = 2 when no two
/// segments are collinear and m = 2g + 2 for a largest collinear group of
/// size g. `step` starts at the smaller of `initial_step` and a quarter of
/// the smallest nonzero endpoint gap relative to the diameter, rounded down
/// to a power of two, and is halved on failure. Throws GeometryError after
/// 64 halvings.
PerturbationResult perturb_to_general_position(const NumericArrangement& arr,
                                               const Rational& initial_step = Rational(1, 1000000));

// ---------------------------------------------------------------------------
// Flattening and transversals

/// Every left endpoint within distance r of (0,0) and every right endpoint
/// within distance r of (1,0) (closed discs, exact comparison of squares).
bool is_flattened_within(const NumericArrangement& arr, const Rational& r);

/// A concrete line, used as a common transversal.
struct StabLine {
    LineCoeffs<Rational> coeffs;
};

bool line_meets_segment(const StabLine& line, const NumericSegment& s);

/// Some line meeting every (closed) segment, or nothing if none exists.
/// Candidates are the lines through pairs of distinct endpoints; if any
/// transversal exists one of those is a transversal too.
std::optional<StabLine> find_stabbing_line(const NumericArrangement& arr);

}  // namespace ramseg

#endif
