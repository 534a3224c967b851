#include "ramseg/graph.hpp"

#include <string>

namespace ramseg {

LabeledGraph::LabeledGraph(std::size_t n) : rows_(n, Bitset(n)) {}

void LabeledGraph::check_vertex(std::size_t v) const {
    if (v < 1 || v > rows_.size())
        throw GraphError("vertex " + std::to_string(v) + " out of range 1.." + std::to_string(rows_.size()));
}

std::size_t LabeledGraph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& r : rows_) twice += r.count();
    return twice / 2;
}

void LabeledGraph::add_edge(std::size_t i, std::size_t j) {
    check_vertex(i);
    check_vertex(j);
    if (i == j) throw GraphError("loop at vertex " + std::to_string(i));
    rows_[i - 1].set(j - 1);
    rows_[j - 1].set(i - 1);
}

bool LabeledGraph::has_edge(std::size_t i, std::size_t j) const {
    check_vertex(i);
    check_vertex(j);
    return rows_[i - 1].test(j - 1);
}

std::size_t LabeledGraph::degree(std::size_t v) const {
    check_vertex(v);
    return rows_[v - 1].count();
}

std::vector<std::pair<std::size_t, std::size_t>> LabeledGraph::edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < rows_.size(); ++i)
        for (std::size_t j = rows_[i].find_next(i + 1); j < rows_.size(); j = rows_[i].find_next(j + 1))
            out.emplace_back(i + 1, j + 1);
    return out;
}

LabeledGraph complete_graph(std::size_t n) { return complement(LabeledGraph(n)); }

LabeledGraph complement(const LabeledGraph& g) {
    LabeledGraph out = g;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        Bitset& r = out.mutable_row(v);
        r.flip_all();
        r.reset(v);
    }
    return out;
}

LabeledGraph lex_product(const LabeledGraph& g, const LabeledGraph& h) {
    const std::size_t ng = g.vertex_count();
    const std::size_t nh = h.vertex_count();
    LabeledGraph out(ng * nh);
    for (std::size_t i = 0; i < ng; ++i) {
        // Row shared by every vertex of block i: whole blocks of G-neighbours.
        Bitset block_row(ng * nh);
        const Bitset& gi = g.row(i);
        for (std::size_t k = gi.find_first(); k < ng; k = gi.find_next(k + 1))
            block_row.set_range(k * nh, (k + 1) * nh);
        for (std::size_t j = 0; j < nh; ++j) {
            Bitset& r = out.mutable_row(i * nh + j);
            r = block_row;
            const Bitset& hj = h.row(j);
            for (std::size_t m = hj.find_first(); m < nh; m = hj.find_next(m + 1)) r.set(i * nh + m);
        }
    }
    return out;
}

bool is_clique(const LabeledGraph& g, const std::vector<std::size_t>& vertices) {
    for (std::size_t a = 0; a < vertices.size(); ++a)
        for (std::size_t b = a + 1; b < vertices.size(); ++b)
            if (vertices[a] == vertices[b] || !g.has_edge(vertices[a], vertices[b])) return false;
    return true;
}

bool is_independent_set(const LabeledGraph& g, const std::vector<std::size_t>& vertices) {
    for (std::size_t a = 0; a < vertices.size(); ++a)
        for (std::size_t b = a + 1; b < vertices.size(); ++b)
            if (vertices[a] == vertices[b] || g.has_edge(vertices[a], vertices[b])) return false;
    return true;
}

VertexSet max_independent_set(const LabeledGraph& g) { return max_clique(complement(g)); }

}  // namespace ramseg
