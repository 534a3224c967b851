#include "ramseg/catalog.hpp"

#include <stdexcept>

namespace ramseg {

namespace {

using P = EpsPolynomial;

SymbolicSegment seg(P lx, P ly, P rx, P ry) { return {{std::move(lx), std::move(ly)}, {std::move(rx), std::move(ry)}}; }

}  // namespace

LabeledGraph cayley(std::size_t n, const std::set<std::size_t>& generators) {
    if (generators.empty()) throw GraphError("cayley: empty generator set");
    std::set<std::size_t> differences;
    for (auto g : generators) {
        if (g < 1 || g >= n) throw GraphError("cayley: generator " + std::to_string(g) + " not in 1.." + std::to_string(n - 1));
        differences.insert(g);
        differences.insert(n - g);
    }
    LabeledGraph out(n);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j)
            if (differences.count(j - i)) out.add_edge(i, j);
    return out;
}

LabeledGraph cayley13() { return cayley(13, {1, 5}); }

// Rows are (left x, left y, right x, right y).
SymbolicArrangement build_ma() {
    const P e = P::epsilon();
    auto e_ = [&](unsigned k) { return pow(e, k); };
    return {
        seg(-e, 0, 1 - 2 * e, 2 * e_(2) + 2 * e_(6)),
        seg(e_(2), e - e_(3), 1 - e_(2), e_(3)),
        seg(0, e_(4) + e_(6), 1, e_(3) + 3 * e_(4)),
        seg(0, e_(4) - e_(6), 1 - 2 * e, 2 * e_(2) - e_(6)),
        seg(-e + e_(2), 0, 1 - 2 * e_(2), 2 * e_(3) - 2 * e_(4)),
        seg(-e, 2 * e_(6), 1 - e, 2 * e_(6)),
        seg(0, e_(6), 1, e_(3) + 2 * e_(4)),
        seg(0, e, 1 + e_(3), 0),
        seg(0, e, 1 - 2 * e_(2), 2 * e_(3) - e_(4)),
        seg(-e_(2) + 3 * e_(3), 3 * e_(6), 1 - 2 * e, 2 * e_(2) + e_(6)),
        seg(-e_(2), e_(6), 1 - 2 * e_(2), 2 * e_(3) - 3 * e_(4)),
        seg(0, e_(4), 1, 0),
        seg(-e, 0, 1 + e, 0),
    };
}

SymbolicArrangement build_mb() {
    const P e = P::epsilon();
    auto e_ = [&](unsigned k) { return pow(e, k); };
    return {
        seg(e, e_(2) - e_(3) + e_(4) - 2 * e_(5), 1 + e_(2), -e_(4) + e_(6)),
        seg(0, e_(2) + 3 * e_(5), 1 - e_(3), e_(7)),
        seg(0, e_(2) + 4 * e_(5), 1 + e, -e_(3)),
        seg(0, 2 * e_(3), 1 + 3 * e_(4), -e_(8)),
        seg(e - e_(2) + e_(3), e_(2) - e_(3) + e_(4) - e_(8), 1 + e, -e_(4)),
        seg(0, e_(2) + e_(5), 1 + e, -e_(3)),
        seg(0, e_(2) + 5 * e_(5), 1 + 3 * e_(4), -3 * e_(7)),
        seg(e - e_(2) + e_(3) + e_(4) + 2 * e_(5), e_(2) - e_(3) + e_(4) + e_(5) + e_(6), 1 + e - e_(4), -e_(3)),
        seg(0, e_(2), 1 + e, -e_(4)),
        seg(0, 0, 1 + 5 * e_(3), 0),
        seg(0, e_(2) + 2 * e_(5), 1 + 3 * e_(4) - 2 * e_(5), e_(8)),
        seg(e - e_(3), e_(3) - e_(4), 1 + e, -e_(4)),
        seg(0, 0, 1, e),
    };
}

std::vector<CatalogEntry> catalog() {
    return {
        {"ma", build_ma(), cayley13(), {13, 2, 4}},
        {"mb", build_mb(), complement(cayley13()), {13, 4, 2}},
    };
}

const CatalogEntry& catalog_entry(const std::string& name) {
    static const std::vector<CatalogEntry> entries = catalog();
    for (const auto& entry : entries)
        if (entry.name == name) return entry;
    throw std::out_of_range("no catalog entry named '" + name + "'");
}

}  // namespace ramseg
