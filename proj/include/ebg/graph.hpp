#pragma once

#include "ebg/rng.hpp"

#include <bit>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace ebg {

// Unordered vertex pair, normalized u < v.
struct Edge {
    int u = 0;
    int v = 0;
    Edge() = default;
    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct EdgeSwap {
    Edge remove;
    Edge add;
    EdgeSwap inverse() const { return {add, remove}; }
};

// A labeled graph on {0..n-1} with exactly k edges. Three coupled views are
// kept in sync: bit-row adjacency (common-neighbor counts are row-AND
// popcounts), a flat edge list (O(1) uniform sampling of a present edge),
// and the degree array.
class LabeledGraph {
public:
    explicit LabeledGraph(int n);
    LabeledGraph(int n, std::span<const Edge> edges);

    int n() const { return n_; }
    int k() const { return static_cast<int>(edges_.size()); }
    std::int64_t pair_count() const { return static_cast<std::int64_t>(n_) * (n_ - 1) / 2; }

    bool has_edge(int u, int v) const;
    int degree(int v) const { return degrees_[static_cast<std::size_t>(v)]; }
    const std::vector<int>& degrees() const { return degrees_; }
    const std::vector<Edge>& edges() const { return edges_; }

    std::span<const std::uint64_t> row(int v) const {
        return {bits_.data() + static_cast<std::size_t>(v) * words_, static_cast<std::size_t>(words_)};
    }
    // |N(u) ∩ N(v)|
    int common_neighbors(int u, int v) const;
    // Visits every neighbor of v in increasing order.
    template <typename F>
    void for_neighbors(int v, F&& f) const;

    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    // Removes edges()[idx] by swapping with the last entry; returns the edge.
    Edge remove_edge_at(int idx);

    LabeledGraph complement() const;

    // Full rebuild from the edge list; throws InternalError if any of the
    // three views disagree.
    void check_coherent() const;

    friend bool operator==(const LabeledGraph& a, const LabeledGraph& b) {
        return a.n_ == b.n_ && a.bits_ == b.bits_;
    }

private:
    void set_bit(int u, int v);
    void clear_bit(int u, int v);
    bool test_bit(int u, int v) const;

    int n_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> bits_;  // n rows of `words_` words each
    std::vector<Edge> edges_;
    std::vector<int> degrees_;
};

template <typename F>
void LabeledGraph::for_neighbors(int v, F&& f) const {
    auto r = row(v);
    for (int w = 0; w < words_; ++w) {
        std::uint64_t bits = r[static_cast<std::size_t>(w)];
        while (bits) {
            int b = std::countr_zero(bits);
            f(w * 64 + b);
            bits &= bits - 1;
        }
    }
}

LabeledGraph new_graph(int n, std::span<const Edge> edges);

LabeledGraph apply_swap(const LabeledGraph& g, const EdgeSwap& s);
void apply_swap_inplace(LabeledGraph& g, const EdgeSwap& s);

// Random graph whose degrees are all floor(2k/n) or ceil(2k/n), with exactly
// (2k mod n) vertices of the larger degree. Deterministic for a fixed seed.
LabeledGraph near_regular_random(int n, std::int64_t k, Rng& rng);
LabeledGraph near_regular_random(int n, std::int64_t k, std::uint64_t seed);

// Uniform edge of the complement graph, by rejection against the adjacency
// rows. Precondition: k < C(n,2).
Edge sample_absent_edge(const LabeledGraph& g, Rng& rng);

}  // namespace ebg
