#include "ramseg/geometry.hpp"

#include <algorithm>
#include <sstream>

namespace ramseg {

namespace {

const NumericPoint& endpoint(const NumericArrangement& arr, std::size_t id) {
    const auto& s = arr[id / 2];
    return id % 2 == 0 ? s.left : s.right;
}

int orientation(const NumericPoint& p, const NumericPoint& q, const NumericPoint& r) {
    return ((q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)).sign();
}

bool within_box(const NumericPoint& p, const NumericSegment& s) {
    return min(s.left.x, s.right.x) <= p.x && p.x <= max(s.left.x, s.right.x) && min(s.left.y, s.right.y) <= p.y &&
           p.y <= max(s.left.y, s.right.y);
}

Rational diameter(const NumericArrangement& arr) {
    Rational lo_x = arr.front().left.x, hi_x = lo_x, lo_y = arr.front().left.y, hi_y = lo_y;
    for (const auto& s : arr) {
        for (const auto* p : {&s.left, &s.right}) {
            lo_x = min(lo_x, p->x);
            hi_x = max(hi_x, p->x);
            lo_y = min(lo_y, p->y);
            hi_y = max(hi_y, p->y);
        }
    }
    Rational d = max(hi_x - lo_x, hi_y - lo_y);
    return d.is_zero() ? Rational(1) : d;
}

// Smallest nonzero separation in the arrangement relative to its diameter:
// endpoint-to-line gaps |a x + b y + c| / (|a| + |b|) and L1 distances
// between distinct endpoints.
Rational smallest_gap(const NumericArrangement& arr, const Rational& diam) {
    std::optional<Rational> gap;
    auto consider = [&](const Rational& g) {
        if (!g.is_zero() && (!gap || g < *gap)) gap = g;
    };
    const std::size_t m = 2 * arr.size();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            const auto& p = endpoint(arr, i);
            const auto& q = endpoint(arr, j);
            consider((p.x - q.x).abs() + (p.y - q.y).abs());
        }
    for (std::size_t seg = 0; seg < arr.size(); ++seg) {
        const auto line = line_coefficients(arr[seg]);
        const Rational norm = line.a.abs() + line.b.abs();
        for (std::size_t k = 0; k < m; ++k)
            if (k / 2 != seg) consider(line.eval(endpoint(arr, k)).abs() / norm);
    }
    return gap ? *gap / diam : Rational(1);
}

// Segments sharing a supporting line get sheared apart: within a group of
// size g, ordered by leftmost point along the line, the member of rank r is
// tilted about that point with slope step^(2(g - r)). Steeper members then
// cross every earlier overlapping member near their own pivot, which lies
// inside both stretched segments.
struct Shear {
    unsigned exponent = 0;
    NumericPoint pivot;
    NumericPoint direction;
};

struct ShearPlan {
    std::vector<std::optional<Shear>> shears;
    std::size_t largest_group = 1;
};

ShearPlan collinear_shears(const NumericArrangement& arr) {
    ShearPlan plan;
    plan.shears.resize(arr.size());
    std::vector<bool> grouped(arr.size(), false);
    for (std::size_t i = 0; i < arr.size(); ++i) {
        if (grouped[i]) continue;
        const auto line = line_coefficients(arr[i]);
        std::vector<std::size_t> group{i};
        for (std::size_t j = i + 1; j < arr.size(); ++j)
            if (!grouped[j] && line.eval(arr[j].left).is_zero() && line.eval(arr[j].right).is_zero())
                group.push_back(j);
        if (group.size() < 2) continue;
        const NumericPoint d{arr[i].right.x - arr[i].left.x, arr[i].right.y - arr[i].left.y};
        auto along = [&](const NumericPoint& q) { return (q.x - arr[i].left.x) * d.x + (q.y - arr[i].left.y) * d.y; };
        auto leftmost = [&](std::size_t k) -> const NumericPoint& {
            return along(arr[k].right) < along(arr[k].left) ? arr[k].right : arr[k].left;
        };
        std::stable_sort(group.begin(), group.end(),
                         [&](std::size_t a, std::size_t b) { return along(leftmost(a)) < along(leftmost(b)); });
        const auto g = static_cast<unsigned>(group.size());
        for (unsigned r = 0; r < g; ++r) {
            grouped[group[r]] = true;
            plan.shears[group[r]] = Shear{2 * (g - r), leftmost(group[r]), d};
        }
        plan.largest_group = std::max(plan.largest_group, group.size());
    }
    return plan;
}

NumericPoint sheared(const NumericPoint& q, const Shear& shear, const Rational& step) {
    const auto& d = shear.direction;
    const Rational t = ((q.x - shear.pivot.x) * d.x + (q.y - shear.pivot.y) * d.y) / (d.x * d.x + d.y * d.y);
    const Rational lift = pow(step, shear.exponent) * t;
    return {q.x - lift * d.y, q.y + lift * d.x};
}

NumericArrangement perturbed(const NumericArrangement& arr, const ShearPlan& plan, const Rational& step,
                             const Rational& diam) {
    NumericArrangement out;
    out.reserve(arr.size());
    // The endpoint offsets stay below the gentlest shear.
    const unsigned shift_exponent = plan.largest_group < 2 ? 2 : 2 * static_cast<unsigned>(plan.largest_group) + 2;
    const Rational shift_unit = pow(step, shift_exponent) * diam;
    auto shifted = [&](const NumericPoint& p, std::size_t id) {
        const Rational k(static_cast<long>(id + 1));
        return NumericPoint{p.x + shift_unit * k, p.y + shift_unit * k * k};
    };
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const auto& s = arr[i];
        const Rational ux = (s.right.x - s.left.x) * step;
        const Rational uy = (s.right.y - s.left.y) * step;
        NumericPoint left{s.left.x - ux, s.left.y - uy};
        NumericPoint right{s.right.x + ux, s.right.y + uy};
        if (const auto& shear = plan.shears[i]) {
            left = sheared(left, *shear, step);
            right = sheared(right, *shear, step);
        }
        out.push_back({shifted(left, 2 * i), shifted(right, 2 * i + 1)});
    }
    return out;
}

}  // namespace

NumericSegment instantiate(const SymbolicSegment& s, const Rational& eps) {
    return {{s.left.x.eval_at(eps), s.left.y.eval_at(eps)}, {s.right.x.eval_at(eps), s.right.y.eval_at(eps)}};
}

NumericArrangement instantiate(const SymbolicArrangement& arr, const Rational& eps) {
    NumericArrangement out;
    out.reserve(arr.size());
    for (const auto& s : arr) out.push_back(instantiate(s, eps));
    return out;
}

std::string PositionViolation::describe() const {
    auto name = [](std::size_t id) {
        return std::string(id % 2 == 0 ? "left" : "right") + "(" + std::to_string(id / 2 + 1) + ")";
    };
    std::ostringstream os;
    switch (kind) {
    case Kind::CoincidentEndpoints: os << "coincident endpoints"; break;
    case Kind::CollinearEndpoints: os << "collinear endpoints"; break;
    case Kind::EndpointOnSegment: os << "endpoint on segment " << segment << ":"; break;
    }
    for (auto id : endpoints) os << " " << name(id);
    return os.str();
}

std::vector<PositionViolation> general_position_check(const NumericArrangement& arr) {
    using Kind = PositionViolation::Kind;
    std::vector<PositionViolation> out;
    const std::size_t m = 2 * arr.size();

    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (i / 2 != j / 2 && endpoint(arr, i) == endpoint(arr, j))
                out.push_back({Kind::CoincidentEndpoints, {i, j}});

    for (std::size_t i = 0; i < m; ++i) {
        const auto& p = endpoint(arr, i);
        for (std::size_t j = i + 1; j < m; ++j) {
            const auto& q = endpoint(arr, j);
            if (p == q) continue;
            for (std::size_t k = j + 1; k < m; ++k) {
                const auto& r = endpoint(arr, k);
                if (r == p || r == q) continue;
                if (orientation(p, q, r) == 0) out.push_back({Kind::CollinearEndpoints, {i, j, k}});
            }
        }
    }

    for (std::size_t seg = 0; seg < arr.size(); ++seg) {
        const auto& s = arr[seg];
        for (std::size_t k = 0; k < m; ++k) {
            if (k / 2 == seg) continue;
            const auto& p = endpoint(arr, k);
            if (p == s.left || p == s.right) continue;
            if (orientation(s.left, s.right, p) == 0 && within_box(p, s))
                out.push_back({Kind::EndpointOnSegment, {k}, seg + 1});
        }
    }
    return out;
}

PerturbationResult perturb_to_general_position(const NumericArrangement& arr, const Rational& initial_step) {
    if (general_position_check(arr).empty()) return {arr, Rational(0), 0};

    const LabeledGraph target = intersection_graph(arr);
    const Rational diam = diameter(arr);
    const ShearPlan plan = collinear_shears(arr);
    Rational step = power_of_two_at_most(min(initial_step, smallest_gap(arr, diam) / 4));
    constexpr int kMaxHalvings = 64;
    for (int halvings = 0; halvings <= kMaxHalvings; ++halvings) {
        NumericArrangement candidate = perturbed(arr, plan, step, diam);
        if (intersection_graph(candidate) == target && general_position_check(candidate).empty())
            return {std::move(candidate), step, halvings};
        step /= 2;
    }
    throw GeometryError("perturbation failed to preserve the intersection graph after 64 halvings");
}

bool is_flattened_within(const NumericArrangement& arr, const Rational& r) {
    const Rational r2 = r * r;
    for (const auto& s : arr) {
        if (s.left.x * s.left.x + s.left.y * s.left.y > r2) return false;
        const Rational dx = s.right.x - 1;
        if (dx * dx + s.right.y * s.right.y > r2) return false;
    }
    return true;
}

bool line_meets_segment(const StabLine& line, const NumericSegment& s) {
    return side_product(line.coeffs, s).sign() <= 0;
}

std::optional<StabLine> find_stabbing_line(const NumericArrangement& arr) {
    const std::size_t m = 2 * arr.size();
    for (std::size_t i = 0; i < m; ++i) {
        const auto& p = endpoint(arr, i);
        for (std::size_t j = i + 1; j < m; ++j) {
            const auto& q = endpoint(arr, j);
            if (p == q) continue;
            StabLine line{line_coefficients(NumericSegment{p, q})};
            bool all = true;
            for (const auto& s : arr) {
                if (!line_meets_segment(line, s)) {
                    all = false;
                    break;
                }
            }
            if (all) return line;
        }
    }
    return std::nullopt;
}

}  // namespace ramseg
