#pragma once

#include "ebg/admissible.hpp"
#include "ebg/automorphism.hpp"
#include "ebg/census.hpp"
#include "ebg/graph.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ebg {

// Exact per-class containment indices for the 4-edge classes, plus the two
// extension identities that tie them to the 3-edge counts:
//   c(k-3) = paw + k3_k2         (every triangle extends by one more edge)
//   m(k-3) = 4*4k2 + 2*p3_2k2    (every 3K2 likewise)
struct FourEdgeReport {
    Profile4 profile;
    std::array<Rat, 11> lambda;  // kClasses4 order; count * |Aut(H)| / |Aut(G)|
    std::vector<SubgraphClass> absent;
    int distinct_lambda_present = 0;
    bool all_classes_present = false;
    bool imbalance_witnessed = false;  // >= 2 distinct lambdas among all 11
    bool triangle_identity_ok = false;
    bool matching_identity_ok = false;
};

struct VerifyOptions {
    std::int64_t budget3 = 1'000'000'000;
    std::int64_t budget4 = 100'000'000;
    int threads = 1;
    bool with_four_edge = true;
    std::int64_t aut_budget = 200'000'000;
};

struct Certificate {
    int schema_version = 1;
    std::string tool_version;
    std::string timestamp;
    int n = 0;
    std::int64_t k = 0;
    std::string graph6;
    Profile2 p2;
    Profile3 p3;
    TargetProfile target;
    bool balanced = false;
    // True when the counts came from exhaustive enumeration rather than the
    // closed forms (the closed-form fallback is flagged, not trusted).
    bool independent_recount = false;
    bool two_edge_balanced = false;
    AutResult aut;
    std::optional<IndexReport> index;
    std::optional<FourEdgeReport> four_edge;
};

// Recounts every profile from scratch (never the incremental path), compares
// against the target, and attaches the automorphism/index/4-edge reports.
Certificate verify_certificate(const LabeledGraph& g, int n, std::int64_t k,
                               const VerifyOptions& opts = {});

// 4b == (n-3)a, the 2-edge balance ratio. Precondition: a > 0.
bool check_2edge_balance(const LabeledGraph& g, int n);

FourEdgeReport four_edge_imbalance(const LabeledGraph& g, int n,
                                   std::int64_t budget = 100'000'000, int threads = 1);

// (n-6)(n+5) - (n-3)(n+2); identically -24, which is why a 4-edge-balanced
// graph cannot exist: balance would force the two factors-cancelled count
// formulas to agree, i.e. this expression to vanish.
std::int64_t nonexistence_identity(std::int64_t n);

struct SmallNCase {
    int n = 0;
    int k = 0;
    std::int64_t graphs_checked = 0;
    std::int64_t balanced_found = 0;  // nontrivially balanced; expected 0
    Rat min_lambda_spread;            // over all graphs: max - min class lambda
    Rat max_lambda_spread;
};

struct SmallNReport {
    std::vector<SmallNCase> cases;
    std::vector<int> vacuous_n;  // n whose nontrivial k-range is empty
    bool none_balanced = true;
};

// Exhaustively enumerates G(n,k) for n in {4,5} over the nontrivial range and
// tests 3-edge balance restricted to the classes embeddable at that n.
SmallNReport exhaustive_small_n();

}  // namespace ebg
