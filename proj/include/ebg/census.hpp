#pragma once

#include "ebg/classes.hpp"
#include "ebg/graph.hpp"

#include <array>
#include <cstdint>

namespace ebg {

struct Profile2 {
    std::int64_t p3 = 0;      // adjacent edge pairs
    std::int64_t two_k2 = 0;  // disjoint edge pairs
    std::int64_t sum() const { return p3 + two_k2; }
    friend bool operator==(const Profile2&, const Profile2&) = default;
};

struct Profile3 {
    std::int64_t k3 = 0;
    std::int64_t p4 = 0;
    std::int64_t k1_3 = 0;
    std::int64_t p3_k2 = 0;
    std::int64_t three_k2 = 0;
    std::int64_t sum() const { return k3 + p4 + k1_3 + p3_k2 + three_k2; }
    std::array<std::int64_t, 5> as_array() const { return {k3, p4, k1_3, p3_k2, three_k2}; }
    friend bool operator==(const Profile3&, const Profile3&) = default;
};

// Counts indexed by kClasses4 order.
struct Profile4 {
    std::array<std::int64_t, 11> counts{};
    std::int64_t& operator[](SubgraphClass c);
    std::int64_t operator[](SubgraphClass c) const;
    std::int64_t sum() const;
    friend bool operator==(const Profile4&, const Profile4&) = default;
};

struct SwapDelta {
    std::int64_t k3 = 0;
    std::int64_t p4 = 0;
    std::int64_t k1_3 = 0;
    std::int64_t p3_k2 = 0;
    std::int64_t three_k2 = 0;
    friend bool operator==(const SwapDelta&, const SwapDelta&) = default;
};

// Closed-form counts from degrees and common-neighbor popcounts.
Profile2 profile2(const LabeledGraph& g);
Profile3 profile3(const LabeledGraph& g);

// Exhaustive enumeration over edge triples/quadruples; the independent path
// used for certification. Throws BudgetError if the enumeration is larger
// than `budget`.
Profile3 profile3_bruteforce(const LabeledGraph& g, std::int64_t budget = 1'000'000'000,
                             int threads = 1);
Profile4 profile4_bruteforce(const LabeledGraph& g, std::int64_t budget = 100'000'000,
                             int threads = 1);

SubgraphClass classify2(Edge a, Edge b);
SubgraphClass classify3(Edge a, Edge b, Edge c);
SubgraphClass classify4(Edge a, Edge b, Edge c, Edge d);

// Difference profile3(swap applied) - profile3(g), from local quantities only.
SwapDelta profile3_delta(const LabeledGraph& g, const EdgeSwap& s);

// Owns a graph plus its incrementally maintained 2- and 3-edge counts.
// Adjacent-pair and disjoint-pair counts (a, b) and the K3/P4/K1,3 counts are
// updated from the neighborhoods of the touched endpoints; the P3uK2 and 3K2
// counts then follow from the extension identities
//   a(k-2) = 3c + 2p + 3s + d      and      b(k-2) = p + 2d + 3m,
// whose exactness is asserted on every update.
class ProfileTracker {
public:
    explicit ProfileTracker(LabeledGraph g);

    const LabeledGraph& graph() const { return graph_; }
    Profile2 profile2() const { return {a_, b_}; }
    Profile3 profile3() const { return {c_, p_, s_, d_, m_}; }

    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    // Removes graph().edges()[idx]; O(degree) like the pair form.
    Edge remove_edge_at(int idx);

    // Recomputes everything from the graph and throws InternalError on any
    // disagreement with the maintained counts.
    void audit() const;

private:
    void apply_insert_delta(int u, int v, int sign_is_insert);
    void derive_tail_counts();

    LabeledGraph graph_;
    std::int64_t a_ = 0, b_ = 0;
    std::int64_t c_ = 0, p_ = 0, s_ = 0, d_ = 0, m_ = 0;
};

}  // namespace ebg
