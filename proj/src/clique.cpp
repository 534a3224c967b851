// Exact maximum clique by bitset branch-and-bound (greedy colouring bound,
// degeneracy initial order), plus a lexicographically-smallest witness pass.

#include <algorithm>
#include <numeric>

#include "ramseg/graph.hpp"

namespace ramseg {

namespace {

/// Smallest-last order: repeatedly remove a minimum-degree vertex (lowest
/// label on ties); the result lists the last removed vertex first.
std::vector<std::size_t> degeneracy_order(const LabeledGraph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::size_t> deg(n);
    for (std::size_t v = 0; v < n; ++v) deg[v] = g.row(v).count();
    std::vector<bool> removed(n, false);
    std::vector<std::size_t> order;
    order.reserve(n);
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t pick = n;
        for (std::size_t v = 0; v < n; ++v)
            if (!removed[v] && (pick == n || deg[v] < deg[pick])) pick = v;
        removed[pick] = true;
        order.push_back(pick);
        const Bitset& r = g.row(pick);
        for (std::size_t u = r.find_first(); u < n; u = r.find_next(u + 1))
            if (!removed[u]) --deg[u];
    }
    std::reverse(order.begin(), order.end());
    return order;
}

class CliqueSearch {
public:
    explicit CliqueSearch(const LabeledGraph& g) : n_(g.vertex_count()), order_(degeneracy_order(g)), position_(n_) {
        for (std::size_t k = 0; k < n_; ++k) position_[order_[k]] = k;
        adj_.assign(n_, Bitset(n_));
        for (std::size_t k = 0; k < n_; ++k) {
            const Bitset& r = g.row(order_[k]);
            for (std::size_t u = r.find_first(); u < n_; u = r.find_next(u + 1)) adj_[k].set(position_[u]);
        }
    }

    /// Size of a maximum clique inside `candidates` (zero-based labels).
    std::size_t maximum(const Bitset& candidates) {
        best_size_ = 0;
        target_ = 0;
        found_ = false;
        run(candidates);
        return best_size_;
    }

    /// Whether `candidates` contains a clique of exactly `size` vertices.
    bool contains_clique_of_size(const Bitset& candidates, std::size_t size) {
        if (size == 0) return true;
        best_size_ = size - 1;
        target_ = size;
        found_ = false;
        run(candidates);
        return found_;
    }

private:
    struct Level {
        Bitset pool;
        Bitset uncolored;
        Bitset colour_class;
        std::vector<std::size_t> vertices;
        std::vector<std::size_t> colours;
    };

    void run(const Bitset& candidates) {
        levels_.clear();
        Bitset mapped(n_);
        for (std::size_t u = candidates.find_first(); u < n_; u = candidates.find_next(u + 1)) mapped.set(position_[u]);
        if (mapped.none()) return;
        level(0).pool = mapped;
        expand(0);
    }

    Level& level(std::size_t d) {
        while (levels_.size() <= d) levels_.push_back({Bitset(n_), Bitset(n_), Bitset(n_), {}, {}});
        return levels_[d];
    }

    // Greedy sequential colouring of the pool; vertices come out grouped by
    // nondecreasing colour.
    void colour(Level& lv) {
        lv.vertices.clear();
        lv.colours.clear();
        lv.uncolored = lv.pool;
        std::size_t k = 0;
        while (!lv.uncolored.none()) {
            ++k;
            lv.colour_class = lv.uncolored;
            for (std::size_t v = lv.colour_class.find_first(); v < n_; v = lv.colour_class.find_next(v + 1)) {
                lv.uncolored.reset(v);
                lv.colour_class.subtract(adj_[v]);
                lv.vertices.push_back(v);
                lv.colours.push_back(k);
            }
        }
    }

    void expand(std::size_t d) {
        colour(level(d));
        for (std::size_t i = level(d).vertices.size(); i-- > 0;) {
            Level& lv = level(d);
            if (d + lv.colours[i] <= best_size_) return;
            const std::size_t v = lv.vertices[i];
            Level& next = level(d + 1);
            Level& cur = levels_[d];
            next.pool = cur.pool;
            next.pool &= adj_[v];
            if (next.pool.none()) {
                if (d + 1 > best_size_) {
                    best_size_ = d + 1;
                    if (target_ != 0 && best_size_ >= target_) found_ = true;
                }
            } else {
                expand(d + 1);
            }
            if (found_) return;
            levels_[d].pool.reset(v);
        }
    }

    std::size_t n_;
    std::vector<std::size_t> order_;
    std::vector<std::size_t> position_;
    std::vector<Bitset> adj_;
    std::vector<Level> levels_;
    std::size_t best_size_ = 0;
    std::size_t target_ = 0;
    bool found_ = false;
};

}  // namespace

VertexSet max_clique(const LabeledGraph& g) {
    const std::size_t n = g.vertex_count();
    VertexSet result;
    if (n == 0) return result;

    CliqueSearch search(g);
    Bitset all(n);
    all.set_all();
    result.size = search.maximum(all);

    // Fix vertices in label order: keep v iff some maximum clique extends
    // the current choice by v. Rejected vertices can never reappear.
    Bitset pool = all;
    for (std::size_t v = 0; v < n && result.vertices.size() < result.size; ++v) {
        if (!pool.test(v)) continue;
        Bitset rest = pool;
        rest &= g.row(v);
        const std::size_t still_needed = result.size - result.vertices.size() - 1;
        if (search.contains_clique_of_size(rest, still_needed)) {
            result.vertices.push_back(v + 1);
            pool = rest;
        } else {
            pool.reset(v);
        }
    }
    return result;
}

}  // namespace ramseg
