#include "ebg/graph.hpp"

#include "ebg/errors.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace ebg {

namespace {

std::string edge_str(int u, int v) {
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

LabeledGraph::LabeledGraph(int n) : n_(n), words_((n + 63) / 64) {
    if (n < 0) throw InputError("vertex count must be nonnegative");
    bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
    degrees_.assign(static_cast<std::size_t>(n_), 0);
}

LabeledGraph::LabeledGraph(int n, std::span<const Edge> edges) : LabeledGraph(n) {
    edges_.reserve(edges.size());
    for (const Edge& e : edges) add_edge(e.u, e.v);
}

bool LabeledGraph::test_bit(int u, int v) const {
    return (bits_[static_cast<std::size_t>(u) * words_ + v / 64] >> (v % 64)) & 1;
}

void LabeledGraph::set_bit(int u, int v) {
    bits_[static_cast<std::size_t>(u) * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
}

void LabeledGraph::clear_bit(int u, int v) {
    bits_[static_cast<std::size_t>(u) * words_ + v / 64] &= ~(std::uint64_t{1} << (v % 64));
}

bool LabeledGraph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
    return test_bit(u, v);
}

int LabeledGraph::common_neighbors(int u, int v) const {
    const std::uint64_t* ru = bits_.data() + static_cast<std::size_t>(u) * words_;
    const std::uint64_t* rv = bits_.data() + static_cast<std::size_t>(v) * words_;
    int c = 0;
    for (int w = 0; w < words_; ++w) c += std::popcount(ru[w] & rv[w]);
    return c;
}

void LabeledGraph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw InputError("edge endpoint out of range: " + edge_str(u, v));
    if (u == v) throw InputError("self-loop rejected: " + edge_str(u, v));
    if (test_bit(u, v)) throw InputError("duplicate edge rejected: " + edge_str(u, v));
    set_bit(u, v);
    set_bit(v, u);
    ++degrees_[static_cast<std::size_t>(u)];
    ++degrees_[static_cast<std::size_t>(v)];
    edges_.emplace_back(u, v);
}

void LabeledGraph::remove_edge(int u, int v) {
    if (!has_edge(u, v)) throw InputError("edge not present: " + edge_str(u, v));
    Edge e(u, v);
    auto it = std::find(edges_.begin(), edges_.end(), e);
    remove_edge_at(static_cast<int>(it - edges_.begin()));
}

Edge LabeledGraph::remove_edge_at(int idx) {
    Edge e = edges_[static_cast<std::size_t>(idx)];
    clear_bit(e.u, e.v);
    clear_bit(e.v, e.u);
    --degrees_[static_cast<std::size_t>(e.u)];
    --degrees_[static_cast<std::size_t>(e.v)];
    edges_[static_cast<std::size_t>(idx)] = edges_.back();
    edges_.pop_back();
    return e;
}

LabeledGraph LabeledGraph::complement() const {
    LabeledGraph g(n_);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (!test_bit(u, v)) g.add_edge(u, v);
    return g;
}

void LabeledGraph::check_coherent() const {
    LabeledGraph rebuilt(n_, edges_);
    if (rebuilt.bits_ != bits_) throw InternalError("adjacency rows disagree with edge list");
    if (rebuilt.degrees_ != degrees_) throw InternalError("degree array disagrees with edge list");
    std::int64_t total = 0;
    for (int v = 0; v < n_; ++v) {
        auto r = row(v);
        int pc = 0;
        for (std::uint64_t w : r) pc += std::popcount(w);
        if (pc != degrees_[static_cast<std::size_t>(v)])
            throw InternalError("row popcount disagrees with degree");
        if (test_bit(v, v)) throw InternalError("nonzero diagonal");
        total += pc;
    }
    if (total != 2 * static_cast<std::int64_t>(edges_.size()))
        throw InternalError("popcount total disagrees with edge count");
}

LabeledGraph new_graph(int n, std::span<const Edge> edges) {
    return LabeledGraph(n, edges);
}

LabeledGraph apply_swap(const LabeledGraph& g, const EdgeSwap& s) {
    LabeledGraph out = g;
    apply_swap_inplace(out, s);
    return out;
}

void apply_swap_inplace(LabeledGraph& g, const EdgeSwap& s) {
    if (!g.has_edge(s.remove.u, s.remove.v))
        throw InputError("swap removes an absent edge: " + edge_str(s.remove.u, s.remove.v));
    if (g.has_edge(s.add.u, s.add.v))
        throw InputError("swap adds a present edge: " + edge_str(s.add.u, s.add.v));
    g.remove_edge(s.remove.u, s.remove.v);
    g.add_edge(s.add.u, s.add.v);
}

LabeledGraph near_regular_random(int n, std::int64_t k, std::uint64_t seed) {
    Rng rng(seed);
    return near_regular_random(n, k, rng);
}

namespace {

// Greedy stub pairing for the requested degree sequence. Dead-ends are
// resolved by a fresh shuffle.
bool try_pair_stubs(int n, const std::vector<int>& target_deg, Rng& rng, LabeledGraph& out) {
    std::vector<int> stubs;
    for (int v = 0; v < n; ++v)
        for (int i = 0; i < target_deg[static_cast<std::size_t>(v)]; ++i) stubs.push_back(v);
    shuffle_vec(stubs, rng);

    LabeledGraph g(n);
    // Pair the last stub with a random compatible partner; swap-and-pop.
    while (!stubs.empty()) {
        int u = stubs.back();
        stubs.pop_back();
        bool paired = false;
        int probes = static_cast<int>(stubs.size());
        for (int t = 0; t < probes; ++t) {
            auto j = static_cast<std::size_t>(uniform_below(rng, stubs.size()));
            int v = stubs[j];
            if (v == u || g.has_edge(u, v)) continue;
            g.add_edge(u, v);
            stubs[j] = stubs.back();
            stubs.pop_back();
            paired = true;
            break;
        }
        if (!paired) return false;
    }
    out = std::move(g);
    return true;
}

}  // namespace

LabeledGraph near_regular_random(int n, std::int64_t k, Rng& rng) {
    if (n <= 0) throw InputError("near_regular_random: need n >= 1");
    std::int64_t pairs = static_cast<std::int64_t>(n) * (n - 1) / 2;
    if (k < 0 || k > pairs) throw InputError("near_regular_random: k out of range");

    // Dense side built as the complement of the sparse complement problem;
    // complementing a near-regular graph preserves near-regularity and the
    // large-degree count.
    if (2 * k > pairs) {
        LabeledGraph co = near_regular_random(n, pairs - k, rng);
        return co.complement();
    }

    std::int64_t base = 2 * k / n;
    int high = static_cast<int>(2 * k % n);
    std::vector<int> target(static_cast<std::size_t>(n), static_cast<int>(base));
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
    shuffle_vec(order, rng);
    for (int i = 0; i < high; ++i) ++target[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])];

    constexpr int kMaxAttempts = 256;
    LabeledGraph g(n);
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        if (try_pair_stubs(n, target, rng, g)) return g;
    }
    throw InternalError("near_regular_random: stub pairing failed repeatedly");
}

Edge sample_absent_edge(const LabeledGraph& g, Rng& rng) {
    int n = g.n();
    if (g.k() >= g.pair_count()) throw InputError("graph is complete; no absent edge");
    for (;;) {
        int u = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n)));
        int v = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n)));
        if (u == v || g.has_edge(u, v)) continue;
        return Edge(u, v);
    }
}

}  // namespace ebg
