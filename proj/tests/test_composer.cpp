#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "ramseg/catalog.hpp"
#include "ramseg/composer.hpp"
#include "ramseg/exponent.hpp"

using namespace ramseg;

namespace {

NumericSegment seg(Rational x1, Rational y1, Rational x2, Rational y2) { return {{x1, y1}, {x2, y2}}; }

const M0Result& m0() {
    static const M0Result result = build_m0();
    return result;
}

// Guest family whose members are the given profile squeezed vertically:
// segment (0, a r/2)-(1, b r/2). Squeezing keeps the intersection graph.
GuestFamily squeezed(std::vector<std::pair<Rational, Rational>> heights) {
    return [heights](const FlatteningSpec& spec) {
        NumericArrangement out;
        for (const auto& [a, b] : heights) out.push_back(seg(0, a * spec.radius() / 2, 1, b * spec.radius() / 2));
        return out;
    };
}

std::vector<std::pair<Rational, Rational>> random_heights(std::mt19937_64& rng, std::size_t n) {
    std::vector<std::pair<Rational, Rational>> out;
    while (out.size() < n) {
        std::pair<Rational, Rational> h{oracle::random_rational(rng, -1, 1, 8), oracle::random_rational(rng, -1, 1, 8)};
        bool fresh = true;
        for (const auto& g : out) fresh &= g.first != h.first && g.second != h.second;
        if (fresh) out.push_back(h);
    }
    return out;
}

NumericArrangement random_host(std::mt19937_64& rng, std::size_t n) {
    for (;;) {
        NumericArrangement arr;
        for (std::size_t i = 0; i < n; ++i) {
            auto s = seg(oracle::random_rational(rng, 0, 4, 16), oracle::random_rational(rng, 0, 4, 16),
                         oracle::random_rational(rng, 0, 4, 16), oracle::random_rational(rng, 0, 4, 16));
            if (s.left.x > s.right.x) std::swap(s.left, s.right);
            arr.push_back(s);
        }
        bool ok = true;
        for (const auto& s : arr) ok &= !is_degenerate(s);
        if (ok && general_position_check(arr).empty()) return arr;
    }
}

}  // namespace

TEST_CASE("flattening radius range") {
    CHECK(FlatteningSpec(Rational(1, 4)).radius() == Rational(1, 4));
    CHECK_THROWS_AS(FlatteningSpec(Rational(0)), CompositionError);
    CHECK_THROWS_AS(FlatteningSpec(Rational(1, 2)), CompositionError);
    CHECK_THROWS_AS(FlatteningSpec(Rational(-1, 8)), CompositionError);
}

TEST_CASE("valid epsilon for the tables") {
    const Rational ea = find_valid_epsilon(build_ma());
    const Rational eb = find_valid_epsilon(build_mb());
    CHECK(ea == Rational(1, 1174));
    CHECK(eb == Rational(1, 1454));
    CHECK(oracle::graph_of(instantiate(build_ma(), ea)) == oracle::cay13());
    CHECK(oracle::graph_of(instantiate(build_mb(), eb)) == oracle::complement_of(oracle::cay13()));

    // Anything strictly below twice the returned value is still valid.
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<long> frac(1, 1999);
    for (int i = 0; i < 20; ++i) {
        const Rational t(frac(rng), 1000);
        CHECK(oracle::graph_of(instantiate(build_ma(), ea * t)) == oracle::cay13());
        CHECK(oracle::graph_of(instantiate(build_mb(), eb * t)) == oracle::complement_of(oracle::cay13()));
    }
}

TEST_CASE("valid epsilon, constant and degenerate inputs") {
    using P = EpsPolynomial;
    const SymbolicArrangement diagonals{{{0, 0}, {1, 1}}, {{0, 1}, {1, 0}}};
    CHECK(find_valid_epsilon(diagonals) == Rational(1, 2));
    CHECK(intersection_graph(instantiate(diagonals, Rational(1, 3))) == complete_graph(2));

    const SymbolicArrangement overlapping{{{0, 0}, {1, 0}}, {{P(Rational(1, 2)), 0}, {2, 0}}};
    CHECK_THROWS_AS(find_valid_epsilon(overlapping), CompositionError);

    const SymbolicArrangement reversed{{{1, 0}, {-P::epsilon(), 0}}};
    CHECK_THROWS_AS(find_valid_epsilon(reversed), CompositionError);
}

TEST_CASE("guest families from symbolic tables") {
    const auto family = family_from_symbolic(build_mb());
    const auto copy = family(FlatteningSpec(Rational(1, 4)));
    CHECK(is_flattened_within(copy, Rational(1, 4)));
    CHECK(oracle::graph_of(copy) == oracle::complement_of(oracle::cay13()));

    const auto tiny = family(FlatteningSpec(Rational(1, 1 << 20)));
    CHECK(is_flattened_within(tiny, Rational(1, 1 << 20)));
    CHECK(oracle::graph_of(tiny) == oracle::complement_of(oracle::cay13()));

    const auto generic = family_from_symbolic(build_ma(), true)(FlatteningSpec(Rational(1, 64)));
    CHECK(general_position_check(generic).empty());
    CHECK(is_flattened_within(generic, Rational(1, 64)));
    CHECK(oracle::graph_of(generic) == oracle::cay13());
}

TEST_CASE("substitution examples") {
    const auto guest = squeezed({{-1, 1}, {1, -1}});
    const auto identity = substitute({seg(0, 0, 1, 0)}, guest);
    CHECK(identity.arrangement.size() == 2);
    CHECK(identity.graph == complete_graph(2));
    CHECK(identity.arrangement == guest(FlatteningSpec(identity.guest_radius)));

    const auto pair = substitute({seg(0, 0, 1, 0), seg(0, 5, 1, 5)}, guest);
    CHECK(pair.arrangement.size() == 4);
    CHECK(oracle::graph_of(pair.arrangement).edge_count() == 2);
    CHECK(pair.graph.has_edge(1, 2));
    CHECK(pair.graph.has_edge(3, 4));

    CHECK_THROWS_AS(substitute({}, guest), CompositionError);
}

TEST_CASE("property: substitution realises the lexicographic product") {
    std::mt19937_64 rng(404);
    std::uniform_int_distribution<std::size_t> size(1, 4);
    for (int round = 0; round < 25; ++round) {
        const auto host = random_host(rng, size(rng));
        const auto heights = random_heights(rng, size(rng));
        const auto result = substitute(host, squeezed(heights));
        const auto expected =
            oracle::lex_of(oracle::graph_of(host), oracle::graph_of(squeezed(heights)(FlatteningSpec(Rational(1, 4)))));
        CHECK(result.arrangement.size() == host.size() * heights.size());
        CHECK(oracle::graph_of(result.arrangement) == expected);
    }
}

TEST_CASE("composed families nest") {
    const auto inner = squeezed({{-1, 1}, {1, -1}});
    const auto outer = squeezed({{-1, -1}, {0, 0}, {1, 1}});
    const auto nested = composed_family(outer, inner);
    const auto arr = nested(FlatteningSpec(Rational(1, 8)));
    CHECK(arr.size() == 6);
    CHECK(is_flattened_within(arr, Rational(1, 8)));
    CHECK(oracle::graph_of(arr) == oracle::lex_of(LabeledGraph(3), complete_graph(2)));

    const auto twice = substitute({seg(0, 0, 1, 1), seg(0, 1, 1, 0)}, nested);
    CHECK(oracle::graph_of(twice.arrangement) ==
          oracle::lex_of(complete_graph(2), oracle::lex_of(LabeledGraph(3), complete_graph(2))));
}

TEST_CASE("the 169-segment arrangement") {
    const auto& r = m0();
    CHECK(r.arrangement.size() == 169);
    CHECK(r.host_epsilon == Rational(1, 1174));
    const auto expected = oracle::lex_of(oracle::cay13(), oracle::complement_of(oracle::cay13()));
    CHECK(r.graph == expected);
    CHECK(oracle::graph_of(r.arrangement) == expected);
    CHECK(r.guest_radius == power_of_two_at_most(r.guest_radius));
    CHECK(ramsey_profile(r.graph) == RamseyProfile{169, 8, 8});
    CHECK(ramsey_profile(r.graph) == RamseyProfile{169, 2 * 4, 4 * 2});

    CHECK(is_flattened_within(r.arrangement, Rational(1, 4)));
    const auto line = find_stabbing_line(r.arrangement);
    REQUIRE(line.has_value());
    for (const auto& s : r.arrangement) CHECK(line_meets_segment(*line, s));
}

TEST_CASE("graph iteration") {
    const auto g0 = lex_product(cayley13(), complement(cayley13()));
    CHECK(iterate_graph(g0, 0) == g0);
    CHECK(iterate_graph(cayley13(), 1) == oracle::lex_of(oracle::cay13(), oracle::cay13()));
    const auto level1 = iterate_graph(g0, 1);
    CHECK(level1.vertex_count() == 28561);
    CHECK(level1.has_edge(1, 170) == g0.has_edge(1, 2));
    CHECK(level1.has_edge(1, 2) == g0.has_edge(1, 2));

    try {
        iterate_graph(g0, 2);
        FAIL("expected a cap error");
    } catch (const CapExceeded& e) {
        CHECK(std::string(e.what()).find("level 2") != std::string::npos);
    }
    CHECK_THROWS_AS(iterate_graph(g0, 1, 1000), CapExceeded);
}

TEST_CASE("profiles and guards") {
    CHECK(ramsey_profile(cayley13()) == RamseyProfile{13, 2, 4});
    CHECK(ramsey_profile(complement(cayley13())) == RamseyProfile{13, 4, 2});
    CHECK(ramsey_profile(LabeledGraph(1)) == RamseyProfile{1, 1, 1});
    CHECK_THROWS_AS(ramsey_profile(LabeledGraph(10001)), CapExceeded);
    CHECK_THROWS_AS(compose_geometry(2), CapExceeded);
}

TEST_CASE("exponent certificates") {
    struct Case {
        unsigned long n, k;
        Rational claim;
    };
    for (const auto& c : {Case{169, 8, Rational(24669, 10000)}, Case{5, 2, Rational(23219, 10000)},
                          Case{27, 4, Rational(23774, 10000)}}) {
        const auto enc = lower_bound_exponent(c.n, c.k);
        const double truth = std::log(double(c.n)) / std::log(double(c.k));
        CHECK(enc.lower < enc.upper);
        CHECK(enc.upper - enc.lower <= Rational(1, 1000000));
        CHECK(enc.lower.to_double() <= truth);
        CHECK(truth <= enc.upper.to_double());
        CHECK(enc.value == doctest::Approx(truth).epsilon(1e-12));
        CHECK(exponent_exceeds(c.n, c.k, c.claim));
        CHECK(enc.lower > c.claim);

        // n^q > k^p checked directly with big integers.
        const mpz_class p = c.claim.numerator(), q = c.claim.denominator();
        mpz_class lhs, rhs;
        mpz_ui_pow_ui(lhs.get_mpz_t(), c.n, q.get_ui());
        mpz_ui_pow_ui(rhs.get_mpz_t(), c.k, p.get_ui());
        CHECK(lhs > rhs);
    }
    const auto enc = lower_bound_exponent(169, 8);
    CHECK(enc.value > 2.4669);
    CHECK(enc.value < 2.4670);
    CHECK(exponent_below(169, 8, Rational(2467, 1000)));
    CHECK_FALSE(exponent_exceeds(169, 8, Rational(2467, 1000)));
    CHECK(exponent_exceeds(4, 2, Rational(19, 10)));
    CHECK_FALSE(exponent_exceeds(4, 2, Rational(2)));
    CHECK_FALSE(exponent_below(4, 2, Rational(2)));
}
