#ifndef RAMSEG_CATALOG_HPP
#define RAMSEG_CATALOG_HPP

#include <set>
#include <string>
#include <vector>

#include "ramseg/geometry.hpp"
#include "ramseg/graph.hpp"

namespace ramseg {

/// (n, largest pairwise-crossing set, largest pairwise-disjoint set).
struct RamseyProfile {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t l = 0;

    friend bool operator==(const RamseyProfile&, const RamseyProfile&) = default;
};

/// Circulant graph on 1..n: {i, j} is an edge iff (j - i) mod n is g or
/// n - g for some generator g. Generators must lie in 1..n-1.
LabeledGraph cayley(std::size_t n, const std::set<std::size_t>& generators);

/// The 13-vertex circulant on Z_13 with connection set {1, 5, 8, 12}.
LabeledGraph cayley13();

/// Flattened 13-segment family whose intersection graph is cayley13().
SymbolicArrangement build_ma();

/// Flattened 13-segment family whose intersection graph is the complement
/// of cayley13().
SymbolicArrangement build_mb();

struct CatalogEntry {
    std::string name;
    SymbolicArrangement arrangement;
    LabeledGraph expected_graph;
    RamseyProfile expected_profile;
};

/// Entries "ma" and "mb".
std::vector<CatalogEntry> catalog();
const CatalogEntry& catalog_entry(const std::string& name);

}  // namespace ramseg

#endif
