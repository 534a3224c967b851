// Independent reference implementations used to check the library.
// They share no code with the predicates and solvers under test.
#ifndef RAMSEG_TESTS_ORACLES_HPP
#define RAMSEG_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "ramseg/catalog.hpp"
#include "ramseg/eps_polynomial.hpp"
#include "ramseg/geometry.hpp"
#include "ramseg/graph.hpp"

namespace oracle {

using ramseg::LabeledGraph;
using ramseg::NumericPoint;
using ramseg::NumericSegment;
using ramseg::Rational;

inline int cross_sign(const NumericPoint& o, const NumericPoint& a, const NumericPoint& b) {
    return ((a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)).sign();
}

inline bool within_box(const NumericPoint& p, const NumericSegment& s) {
    return ramseg::min(s.left.x, s.right.x) <= p.x && p.x <= ramseg::max(s.left.x, s.right.x) &&
           ramseg::min(s.left.y, s.right.y) <= p.y && p.y <= ramseg::max(s.left.y, s.right.y);
}

// Textbook orientation test for closed segments.
inline bool segments_meet(const NumericSegment& s, const NumericSegment& t) {
    const int d1 = cross_sign(t.left, t.right, s.left);
    const int d2 = cross_sign(t.left, t.right, s.right);
    const int d3 = cross_sign(s.left, s.right, t.left);
    const int d4 = cross_sign(s.left, s.right, t.right);
    if (d1 * d2 < 0 && d3 * d4 < 0) return true;
    if (d1 == 0 && within_box(s.left, t)) return true;
    if (d2 == 0 && within_box(s.right, t)) return true;
    if (d3 == 0 && within_box(t.left, s)) return true;
    if (d4 == 0 && within_box(t.right, s)) return true;
    return false;
}

inline LabeledGraph graph_of(const ramseg::NumericArrangement& arr) {
    LabeledGraph g(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i)
        for (std::size_t j = i + 1; j < arr.size(); ++j)
            if (segments_meet(arr[i], arr[j])) g.add_edge(i + 1, j + 1);
    return g;
}

// Exhaustive subset search; fine up to about 20 vertices.
inline std::size_t clique_number(const LabeledGraph& g, bool independent = false) {
    const std::size_t n = g.vertex_count();
    std::size_t best = 0;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        const auto size = static_cast<std::size_t>(__builtin_popcount(mask));
        if (size <= best) continue;
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i)
            if (mask >> i & 1u)
                for (std::size_t j = i + 1; j < n && ok; ++j)
                    if (mask >> j & 1u) ok = g.has_edge(i + 1, j + 1) != independent;
        if (ok) best = size;
    }
    return best;
}

inline std::size_t independence_number(const LabeledGraph& g) { return clique_number(g, true); }

// Enumerates every maximal clique (Bron-Kerbosch with a pivot, no size
// bounds) and reports the largest; handles a few dozen vertices.
inline std::size_t largest_maximal_clique(const LabeledGraph& g, bool independent = false) {
    const std::size_t n = g.vertex_count();
    auto adjacent = [&](std::size_t u, std::size_t v) { return u != v && g.has_edge(u, v) != independent; };
    std::size_t best = 0;
    std::size_t depth = 0;
    auto recurse = [&](auto&& self, std::vector<std::size_t> p, std::vector<std::size_t> x) -> void {
        if (p.empty() && x.empty()) best = std::max(best, depth);
        if (p.empty()) return;
        std::size_t pivot = p.front(), most = 0;
        for (const auto* pool : {&p, &x})
            for (auto u : *pool) {
                std::size_t k = 0;
                for (auto v : p) k += adjacent(u, v);
                if (k >= most) most = k, pivot = u;
            }
        std::vector<std::size_t> branch;
        for (auto v : p)
            if (!adjacent(pivot, v)) branch.push_back(v);
        for (auto v : branch) {
            std::vector<std::size_t> p2, x2;
            for (auto u : p)
                if (adjacent(u, v)) p2.push_back(u);
            for (auto u : x)
                if (adjacent(u, v)) x2.push_back(u);
            ++depth;
            self(self, p2, x2);
            --depth;
            p.erase(std::find(p.begin(), p.end(), v));
            x.push_back(v);
        }
    };
    std::vector<std::size_t> all;
    for (std::size_t v = 1; v <= n; ++v) all.push_back(v);
    recurse(recurse, all, {});
    return best;
}

inline LabeledGraph circulant(std::size_t n, std::vector<std::size_t> diffs) {
    LabeledGraph g(n);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j)
            for (auto d : diffs)
                if (j - i == d) g.add_edge(i, j);
    return g;
}

// Cay(Z13; 1, 5) written out from its forward differences.
inline LabeledGraph cay13() { return circulant(13, {1, 5, 8, 12}); }

inline LabeledGraph complement_of(const LabeledGraph& g) {
    LabeledGraph c(g.vertex_count());
    for (std::size_t i = 1; i <= g.vertex_count(); ++i)
        for (std::size_t j = i + 1; j <= g.vertex_count(); ++j)
            if (!g.has_edge(i, j)) c.add_edge(i, j);
    return c;
}

inline LabeledGraph lex_of(const LabeledGraph& g, const LabeledGraph& h) {
    const std::size_t m = h.vertex_count();
    LabeledGraph p(g.vertex_count() * m);
    for (std::size_t a = 0; a < p.vertex_count(); ++a)
        for (std::size_t b = a + 1; b < p.vertex_count(); ++b) {
            const std::size_t i = a / m + 1, j = a % m + 1, i2 = b / m + 1, j2 = b % m + 1;
            if ((i != i2 && g.has_edge(i, i2)) || (i == i2 && h.has_edge(j, j2))) p.add_edge(a + 1, b + 1);
        }
    return p;
}

inline LabeledGraph random_graph(std::mt19937_64& rng, std::size_t n, double density = 0.5) {
    std::bernoulli_distribution coin(density);
    LabeledGraph g(n);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j)
            if (coin(rng)) g.add_edge(i, j);
    return g;
}

inline Rational random_rational(std::mt19937_64& rng, long lo, long hi, long den) {
    std::uniform_int_distribution<long> num(lo * den, hi * den);
    return Rational(num(rng), den);
}

// Polynomial with up to `max_terms` terms of degree <= 10, integer
// coefficients in [-100, 100].
inline ramseg::EpsPolynomial random_polynomial(std::mt19937_64& rng, int max_terms = 5) {
    std::uniform_int_distribution<int> count(1, max_terms), degree(0, 10), coeff(-100, 100);
    std::vector<ramseg::EpsTerm> terms;
    const int k = count(rng);
    for (int i = 0; i < k; ++i) terms.push_back({static_cast<unsigned>(degree(rng)), Rational(coeff(rng))});
    return ramseg::EpsPolynomial(terms);
}

// Is there a line through two distinct endpoints that meets every segment?
// Uses cross products only.
inline bool has_endpoint_transversal(const ramseg::NumericArrangement& arr) {
    std::vector<NumericPoint> pts;
    for (const auto& s : arr) {
        pts.push_back(s.left);
        pts.push_back(s.right);
    }
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            if (pts[i] == pts[j]) continue;
            bool all = true;
            for (const auto& s : arr)
                if (cross_sign(pts[i], pts[j], s.left) * cross_sign(pts[i], pts[j], s.right) > 0) {
                    all = false;
                    break;
                }
            if (all) return true;
        }
    return false;
}

}  // namespace oracle

#endif
