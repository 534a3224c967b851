#ifndef RAMSEG_GRAPH_HPP
#define RAMSEG_GRAPH_HPP

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ramseg/bitset.hpp"

namespace ramseg {

class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Simple undirected graph on vertices labeled 1..n.
///
/// Labels are significant: two graphs compare equal only when they have the
/// same vertex count and the same edge set under the identity labeling.
class LabeledGraph {
public:
    LabeledGraph() = default;
    explicit LabeledGraph(std::size_t n);

    std::size_t vertex_count() const { return rows_.size(); }
    std::size_t edge_count() const;

    void add_edge(std::size_t i, std::size_t j);
    bool has_edge(std::size_t i, std::size_t j) const;
    std::size_t degree(std::size_t v) const;

    /// Edges {i, j} with i < j in lexicographic order.
    std::vector<std::pair<std::size_t, std::size_t>> edges() const;

    /// Zero-based adjacency row of vertex `v + 1`.
    const Bitset& row(std::size_t v) const { return rows_[v]; }
    Bitset& mutable_row(std::size_t v) { return rows_[v]; }

    friend bool operator==(const LabeledGraph&, const LabeledGraph&) = default;

private:
    void check_vertex(std::size_t v) const;

    std::vector<Bitset> rows_;
};

LabeledGraph complete_graph(std::size_t n);
LabeledGraph complement(const LabeledGraph& g);

/// Lexicographic product G[H]: vertex (i, j) gets label (i-1)*|H| + j and is
/// adjacent to (i', j') iff {i, i'} is an edge of G, or i = i' and {j, j'} is
/// an edge of H.
LabeledGraph lex_product(const LabeledGraph& g, const LabeledGraph& h);

inline bool graphs_equal(const LabeledGraph& g, const LabeledGraph& h) { return g == h; }

/// Vertex set (labels ascending) with its size.
struct VertexSet {
    std::size_t size = 0;
    std::vector<std::size_t> vertices;
};

bool is_clique(const LabeledGraph& g, const std::vector<std::size_t>& vertices);
bool is_independent_set(const LabeledGraph& g, const std::vector<std::size_t>& vertices);

/// Exact maximum clique. The witness is the lexicographically smallest
/// maximum clique, so the answer does not depend on search order.
VertexSet max_clique(const LabeledGraph& g);

/// Exact maximum independent set (maximum clique of the complement), again
/// with the lexicographically smallest witness.
VertexSet max_independent_set(const LabeledGraph& g);

}  // namespace ramseg

#endif
