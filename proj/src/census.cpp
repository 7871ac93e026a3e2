#include "ebg/census.hpp"

#include "ebg/errors.hpp"
#include "ebg/ints.hpp"

#include <algorithm>
#include <string>
#include <thread>
#include <vector>

namespace ebg {

namespace {

std::size_t idx4(SubgraphClass c) {
    for (std::size_t i = 0; i < kClasses4.size(); ++i)
        if (kClasses4[i] == c) return i;
    throw InternalError("not a 4-edge class");
}

}  // namespace

std::int64_t& Profile4::operator[](SubgraphClass c) { return counts[idx4(c)]; }
std::int64_t Profile4::operator[](SubgraphClass c) const { return counts[idx4(c)]; }
std::int64_t Profile4::sum() const {
    std::int64_t s = 0;
    for (auto v : counts) s += v;
    return s;
}

Profile2 profile2(const LabeledGraph& g) {
    std::int64_t a = 0;
    for (int v = 0; v < g.n(); ++v) a += choose2(g.degree(v));
    return {a, choose2(g.k()) - a};
}

Profile3 profile3(const LabeledGraph& g) {
    const std::int64_t k = g.k();
    std::int64_t triangle3 = 0;  // 3 * triangle count
    std::int64_t path_mid = 0;   // sum over edges of (deg(u)-1)(deg(v)-1)
    for (const Edge& e : g.edges()) {
        triangle3 += g.common_neighbors(e.u, e.v);
        path_mid += static_cast<std::int64_t>(g.degree(e.u) - 1) * (g.degree(e.v) - 1);
    }
    if (triangle3 % 3 != 0) throw InternalError("triangle count not divisible by 3");
    std::int64_t c = triangle3 / 3;

    std::int64_t a = 0, s = 0;
    for (int v = 0; v < g.n(); ++v) {
        a += choose2(g.degree(v));
        s += choose3(g.degree(v));
    }
    std::int64_t b = choose2(k) - a;
    std::int64_t p = path_mid - 3 * c;
    std::int64_t d = a * (k - 2) - 3 * c - 2 * p - 3 * s;
    std::int64_t m3 = b * (k - 2) - p - 2 * d;
    if (m3 % 3 != 0) throw InternalError("3K2 count not divisible by 3");
    std::int64_t m = m3 / 3;
    if (d < 0 || m < 0) throw InternalError("negative subgraph count");
    return {c, p, s, d, m};
}

SubgraphClass classify2(Edge a, Edge b) {
    bool adjacent = a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
    return adjacent ? SubgraphClass::P3 : SubgraphClass::TwoK2;
}

SubgraphClass classify3(Edge a, Edge b, Edge c) {
    // Support size then maximum degree separate the five classes.
    std::array<int, 6> verts{a.u, a.v, b.u, b.v, c.u, c.v};
    std::sort(verts.begin(), verts.end());
    int support = 1;
    int max_run = 1, run = 1;
    for (int i = 1; i < 6; ++i) {
        if (verts[static_cast<std::size_t>(i)] == verts[static_cast<std::size_t>(i - 1)]) {
            ++run;
        } else {
            ++support;
            run = 1;
        }
        max_run = std::max(max_run, run);
    }
    switch (support) {
        case 3: return SubgraphClass::K3;
        case 4: return max_run == 3 ? SubgraphClass::K13 : SubgraphClass::P4;
        case 5: return SubgraphClass::P3K2;
        default: return SubgraphClass::ThreeK2;
    }
}

SubgraphClass classify4(Edge a, Edge b, Edge c, Edge d) {
    std::array<Edge, 4> es{a, b, c, d};
    std::array<int, 8> verts{a.u, a.v, b.u, b.v, c.u, c.v, d.u, d.v};
    std::sort(verts.begin(), verts.end());
    int support = 1, max_deg = 1, run = 1;
    for (int i = 1; i < 8; ++i) {
        if (verts[static_cast<std::size_t>(i)] == verts[static_cast<std::size_t>(i - 1)]) {
            ++run;
        } else {
            ++support;
            run = 1;
        }
        max_deg = std::max(max_deg, run);
    }
    auto deg_of = [&](int v) {
        int deg = 0;
        for (const Edge& e : es) deg += (e.u == v) + (e.v == v);
        return deg;
    };
    auto has_triangle = [&]() {
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                for (int l = j + 1; l < 4; ++l)
                    if (classify3(es[static_cast<std::size_t>(i)], es[static_cast<std::size_t>(j)],
                                  es[static_cast<std::size_t>(l)]) == SubgraphClass::K3)
                        return true;
        return false;
    };
    switch (support) {
        case 4:
            return max_deg == 3 ? SubgraphClass::Paw : SubgraphClass::C4;
        case 5:
            if (max_deg == 4) return SubgraphClass::K14;
            if (max_deg == 3) return SubgraphClass::Fork;
            return has_triangle() ? SubgraphClass::K3K2 : SubgraphClass::P5;
        case 6:
            if (max_deg == 3) return SubgraphClass::K13K2;
            // Both remaining classes have degree multiset {2,2,1,1,1,1}; only
            // the 4-vertex path has its two degree-2 vertices adjacent.
            for (const Edge& e : es)
                if (deg_of(e.u) == 2 && deg_of(e.v) == 2) return SubgraphClass::P4K2;
            return SubgraphClass::TwoP3;
        case 7:
            return SubgraphClass::P3TwoK2;
        default:
            return SubgraphClass::FourK2;
    }
}

namespace {

// Splits [0, k) into contiguous first-index blocks, one per thread. Each
// thread fills its own slot; the merged sum does not depend on the partition.
template <typename Body>
void parallel_first_index(int k, int threads, Body&& body) {
    threads = std::max(1, std::min(threads, std::max(k, 1)));
    if (threads == 1) {
        body(0, 0, k);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) {
        int lo = static_cast<int>(static_cast<std::int64_t>(k) * t / threads);
        int hi = static_cast<int>(static_cast<std::int64_t>(k) * (t + 1) / threads);
        pool.emplace_back(body, static_cast<std::size_t>(t), lo, hi);
    }
    for (auto& th : pool) th.join();
}

}  // namespace

Profile3 profile3_bruteforce(const LabeledGraph& g, std::int64_t budget, int threads) {
    const auto& es = g.edges();
    const int k = g.k();
    if (choose3(k) > budget)
        throw BudgetError("profile3_bruteforce: " + std::to_string(choose3(k)) +
                          " triples exceed budget " + std::to_string(budget));
    std::vector<Profile3> partial(static_cast<std::size_t>(std::max(1, threads)));
    parallel_first_index(k, threads, [&](std::size_t slot, int lo, int hi) {
        Profile3 local;
        for (int i = lo; i < hi; ++i)
            for (int j = i + 1; j < k; ++j)
                for (int l = j + 1; l < k; ++l) {
                    switch (classify3(es[static_cast<std::size_t>(i)], es[static_cast<std::size_t>(j)],
                                      es[static_cast<std::size_t>(l)])) {
                        case SubgraphClass::K3: ++local.k3; break;
                        case SubgraphClass::P4: ++local.p4; break;
                        case SubgraphClass::K13: ++local.k1_3; break;
                        case SubgraphClass::P3K2: ++local.p3_k2; break;
                        default: ++local.three_k2; break;
                    }
                }
        partial[slot] = local;
    });
    Profile3 total;
    for (const Profile3& q : partial) {
        total.k3 += q.k3;
        total.p4 += q.p4;
        total.k1_3 += q.k1_3;
        total.p3_k2 += q.p3_k2;
        total.three_k2 += q.three_k2;
    }
    return total;
}

Profile4 profile4_bruteforce(const LabeledGraph& g, std::int64_t budget, int threads) {
    const auto& es = g.edges();
    const int k = g.k();
    if (choose4(k) > budget)
        throw BudgetError("profile4_bruteforce: " + std::to_string(choose4(k)) +
                          " quadruples exceed budget " + std::to_string(budget));
    std::vector<Profile4> partial(static_cast<std::size_t>(std::max(1, threads)));
    parallel_first_index(k, threads, [&](std::size_t slot, int lo, int hi) {
        Profile4 local;
        for (int i = lo; i < hi; ++i)
            for (int j = i + 1; j < k; ++j)
                for (int l = j + 1; l < k; ++l)
                    for (int h = l + 1; h < k; ++h)
                        ++local[classify4(es[static_cast<std::size_t>(i)], es[static_cast<std::size_t>(j)],
                                          es[static_cast<std::size_t>(l)], es[static_cast<std::size_t>(h)])];
        partial[slot] = local;
    });
    Profile4 total;
    for (const Profile4& q : partial)
        for (std::size_t i = 0; i < total.counts.size(); ++i) total.counts[i] += q.counts[i];
    return total;
}

ProfileTracker::ProfileTracker(LabeledGraph g) : graph_(std::move(g)) {
    Profile2 p2 = ebg::profile2(graph_);
    Profile3 p3 = ebg::profile3(graph_);
    a_ = p2.p3;
    b_ = p2.two_k2;
    c_ = p3.k3;
    p_ = p3.p4;
    s_ = p3.k1_3;
    d_ = p3.p3_k2;
    m_ = p3.three_k2;
}

// Delta of inserting the edge (u,v). Precondition: (u,v) is absent from the
// current graph state — callers invoke this before an insertion or after a
// removal, so the local quantities read the same way for both signs.
// New K3: one per common neighbor. New K1,3: pick two further neighbors at
// either endpoint. New P4: (u,v) as middle edge, du*dv minus the common
// neighbors (those close into triangles), plus (u,v) as an end edge, walks
// x-y two steps out of each endpoint avoiding the other.
void ProfileTracker::apply_insert_delta(int u, int v, int sign) {
    std::int64_t du = graph_.degree(u);
    std::int64_t dv = graph_.degree(v);
    std::int64_t codeg = graph_.common_neighbors(u, v);
    auto nbr_degm1 = [this](int x) {
        std::int64_t s = 0;
        graph_.for_neighbors(x, [&](int y) { s += graph_.degree(y) - 1; });
        return s;
    };
    std::int64_t sum_u = nbr_degm1(u);
    std::int64_t sum_v = nbr_degm1(v);
    a_ += sign * (du + dv);
    c_ += sign * codeg;
    s_ += sign * (choose2(du) + choose2(dv));
    p_ += sign * (du * dv + sum_u + sum_v - 3 * codeg);
}

void ProfileTracker::derive_tail_counts() {
    const std::int64_t k = graph_.k();
    b_ = choose2(k) - a_;
    d_ = a_ * (k - 2) - 3 * c_ - 2 * p_ - 3 * s_;
    std::int64_t m3 = b_ * (k - 2) - p_ - 2 * d_;
    if (m3 % 3 != 0) throw InternalError("tracker: 3K2 identity not divisible by 3");
    m_ = m3 / 3;
    if (d_ < 0 || m_ < 0) throw InternalError("tracker: negative derived count");
}

void ProfileTracker::add_edge(int u, int v) {
    if (u == v || u < 0 || v < 0 || u >= graph_.n() || v >= graph_.n() || graph_.has_edge(u, v))
        throw InputError("tracker: cannot add edge (" + std::to_string(u) + "," +
                         std::to_string(v) + ")");
    apply_insert_delta(u, v, +1);
    graph_.add_edge(u, v);
    derive_tail_counts();
}

void ProfileTracker::remove_edge(int u, int v) {
    graph_.remove_edge(u, v);
    apply_insert_delta(u, v, -1);
    derive_tail_counts();
}

Edge ProfileTracker::remove_edge_at(int idx) {
    Edge e = graph_.remove_edge_at(idx);
    apply_insert_delta(e.u, e.v, -1);
    derive_tail_counts();
    return e;
}

void ProfileTracker::audit() const {
    Profile2 p2 = ebg::profile2(graph_);
    Profile3 p3 = ebg::profile3(graph_);
    if (p2 != profile2() || p3 != profile3())
        throw InternalError("tracker audit: maintained profile disagrees with recount");
}

SwapDelta profile3_delta(const LabeledGraph& g, const EdgeSwap& s) {
    if (!g.has_edge(s.remove.u, s.remove.v))
        throw InputError("profile3_delta: swap removes an absent edge");
    if (g.has_edge(s.add.u, s.add.v) || s.add.u == s.add.v)
        throw InputError("profile3_delta: swap adds a present edge");
    ProfileTracker t(g);
    Profile3 before = t.profile3();
    t.remove_edge(s.remove.u, s.remove.v);
    t.add_edge(s.add.u, s.add.v);
    Profile3 after = t.profile3();
    return {after.k3 - before.k3, after.p4 - before.p4, after.k1_3 - before.k1_3,
            after.p3_k2 - before.p3_k2, after.three_k2 - before.three_k2};
}

}  // namespace ebg
