#include "ebg/verify.hpp"

#include "ebg/errors.hpp"
#include "ebg/graph6.hpp"
#include "ebg/version.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <set>

namespace ebg {

namespace {

std::string utc_timestamp() {
    auto now = std::chrono::system_clock::now();
    std::time_t tt = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&tt, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace

bool check_2edge_balance(const LabeledGraph& g, int n) {
    Profile2 p2 = profile2(g);
    if (p2.p3 <= 0) throw InputError("check_2edge_balance: no adjacent edge pair present");
    return 4 * p2.two_k2 == static_cast<std::int64_t>(n - 3) * p2.p3;
}

std::int64_t nonexistence_identity(std::int64_t n) {
    if (n < 8) throw InputError("nonexistence_identity: needs n >= 8");
    return (n - 6) * (n + 5) - (n - 3) * (n + 2);
}

FourEdgeReport four_edge_imbalance(const LabeledGraph& g, int n, std::int64_t budget,
                                   int threads) {
    FourEdgeReport rep;
    rep.profile = profile4_bruteforce(g, budget, threads);
    AutResult aut = aut_order(g);

    std::set<Rat> present_values;
    std::set<Rat> all_values;
    for (std::size_t i = 0; i < kClasses4.size(); ++i) {
        SubgraphClass cls = kClasses4[i];
        Int count = rep.profile.counts[i];
        rep.lambda[i] = lambda_for_class(count, class_aut_order(cls, n), aut.order);
        all_values.insert(rep.lambda[i]);
        if (count > 0)
            present_values.insert(rep.lambda[i]);
        else
            rep.absent.push_back(cls);
    }
    rep.distinct_lambda_present = static_cast<int>(present_values.size());
    rep.all_classes_present = rep.absent.empty();
    rep.imbalance_witnessed = all_values.size() >= 2;

    Profile3 p3 = profile3_bruteforce(g, budget, threads);
    std::int64_t ext = g.k() - 3;
    rep.triangle_identity_ok =
        p3.k3 * ext == rep.profile[SubgraphClass::Paw] + rep.profile[SubgraphClass::K3K2];
    rep.matching_identity_ok = p3.three_k2 * ext == 4 * rep.profile[SubgraphClass::FourK2] +
                                                        2 * rep.profile[SubgraphClass::P3TwoK2];
    return rep;
}

Certificate verify_certificate(const LabeledGraph& g, int n, std::int64_t k,
                               const VerifyOptions& opts) {
    if (g.n() != n)
        throw InputError("dimension mismatch: graph has " + std::to_string(g.n()) +
                         " vertices, expected " + std::to_string(n));
    if (g.k() != k)
        throw InputError("dimension mismatch: graph has " + std::to_string(g.k()) +
                         " edges, expected " + std::to_string(k));
    if (!is_admissible(n, k))
        throw InputError("verify: (" + std::to_string(n) + "," + std::to_string(k) +
                         ") is not admissible");

    Certificate cert;
    cert.tool_version = kVersion;
    cert.timestamp = utc_timestamp();
    cert.n = n;
    cert.k = k;
    cert.graph6 = emit_graph6(g);
    cert.target = target_profile(n, k);

    try {
        cert.p3 = profile3_bruteforce(g, opts.budget3, opts.threads);
        cert.independent_recount = true;
    } catch (const BudgetError&) {
        cert.p3 = profile3(g);
        cert.independent_recount = false;
    }
    cert.p2 = profile2(g);

    if (cert.p2.sum() != choose2(k) || cert.p3.sum() != choose3(k))
        throw InternalError("verify: profile sums disagree with binomials");

    cert.balanced = cert.p3 == cert.target.profile3_i64() && cert.p2 == cert.target.profile2_i64();
    cert.two_edge_balanced = check_2edge_balance(g, n);
    cert.aut = aut_order(g, opts.aut_budget);
    if (cert.balanced) cert.index = index_lambda(n, cert.p3.k3, cert.aut);
    if (opts.with_four_edge && choose4(k) <= opts.budget4)
        cert.four_edge = four_edge_imbalance(g, n, opts.budget4, opts.threads);
    return cert;
}

namespace {

// Balance values count * |Aut(class)| restricted to the classes embeddable
// at this n; balanced iff all equal.
struct SmallNBalance {
    std::vector<Int> values;
    bool balanced;
};

SmallNBalance small_n_balance(const Profile3& p3, int n) {
    SmallNBalance r;
    auto push = [&](SubgraphClass cls, std::int64_t count) {
        if (n >= class_support(cls)) r.values.push_back(Int(count) * class_aut_order(cls, n));
    };
    push(SubgraphClass::K3, p3.k3);
    push(SubgraphClass::P4, p3.p4);
    push(SubgraphClass::K13, p3.k1_3);
    push(SubgraphClass::P3K2, p3.p3_k2);
    push(SubgraphClass::ThreeK2, p3.three_k2);
    r.balanced = std::all_of(r.values.begin(), r.values.end(),
                             [&](const Int& v) { return v == r.values.front(); });
    return r;
}

}  // namespace

SmallNReport exhaustive_small_n() {
    SmallNReport report;
    for (int n : {4, 5}) {
        std::int64_t pairs = static_cast<std::int64_t>(n) * (n - 1) / 2;
        std::int64_t k_hi = pairs / 2;
        if (k_hi < 4) {
            report.vacuous_n.push_back(n);
            continue;
        }
        std::vector<Edge> all_edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) all_edges.emplace_back(u, v);

        for (int k = 4; k <= k_hi; ++k) {
            SmallNCase cs;
            cs.n = n;
            cs.k = k;
            bool first = true;
            // enumerate all k-subsets of the edge set
            std::vector<int> sel(static_cast<std::size_t>(k));
            for (int i = 0; i < k; ++i) sel[static_cast<std::size_t>(i)] = i;
            for (;;) {
                std::vector<Edge> edges;
                edges.reserve(static_cast<std::size_t>(k));
                for (int i : sel) edges.push_back(all_edges[static_cast<std::size_t>(i)]);
                LabeledGraph g(n, edges);
                ++cs.graphs_checked;

                auto bal = small_n_balance(profile3_bruteforce(g), n);
                if (bal.balanced) ++cs.balanced_found;
                Int lo = *std::min_element(bal.values.begin(), bal.values.end());
                Int hi = *std::max_element(bal.values.begin(), bal.values.end());
                Rat spread = Rat(hi - lo, aut_order(g).order);
                if (first || spread < cs.min_lambda_spread) cs.min_lambda_spread = spread;
                if (first || spread > cs.max_lambda_spread) cs.max_lambda_spread = spread;
                first = false;

                // next combination
                int i = k - 1;
                while (i >= 0 && sel[static_cast<std::size_t>(i)] ==
                                     static_cast<int>(all_edges.size()) - k + i)
                    --i;
                if (i < 0) break;
                ++sel[static_cast<std::size_t>(i)];
                for (int j = i + 1; j < k; ++j)
                    sel[static_cast<std::size_t>(j)] = sel[static_cast<std::size_t>(j - 1)] + 1;
            }
            if (cs.balanced_found > 0) report.none_balanced = false;
            report.cases.push_back(cs);
        }
    }
    return report;
}

}  // namespace ebg
