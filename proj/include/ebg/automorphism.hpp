#pragma once

#include "ebg/classes.hpp"
#include "ebg/graph.hpp"
#include "ebg/ints.hpp"

#include <cstdint>

namespace ebg {

struct AutResult {
    Int order;          // |Aut(G)| on all n labeled vertices
    Int support_order;  // |Aut| of the graph induced on non-isolated vertices
    int isolated_count = 0;
    // invariant: order == support_order * isolated_count!
};

// Exact automorphism group order. Isolated vertices contribute a factorial
// factor; on the support the count runs equitable-partition refinement
// (degree classes, then iterated neighbor-class signatures) followed by
// backtracking over the refined cells. `node_budget` bounds the backtracking
// work; pathological symmetric inputs fail loudly instead of running away.
AutResult aut_order(const LabeledGraph& g, std::int64_t node_budget = 200'000'000);

// Closed-form |Aut| for the template classes, embedded on n vertices.
Int template_aut_order(SubgraphClass c, std::int64_t n);

// Index of a 3-edge-balanced graph: lambda = c * 6(n-3)! / |Aut(G)|, kept as
// the exact integer plus the factored rendering q * (n-3)!.
struct IndexReport {
    Int lambda;
    Rat q;
    std::int64_t base = 0;  // lambda == q * base!
};
IndexReport index_lambda(std::int64_t n, std::int64_t triangle_count, const AutResult& aut_g);

// Containment count of Lemma form: count * |Aut(H)| / |Aut(G)| as an exact
// rational (integrality is not required here; imbalance reports compare these
// values exactly).
Rat lambda_for_class(const Int& count, const Int& aut_h, const Int& aut_g);

}  // namespace ebg
