#include "ebg/classes.hpp"

#include "ebg/errors.hpp"

namespace ebg {

namespace {

struct ClassInfo {
    std::string_view name;
    int edges;
    int support;
    std::int64_t aut_coeff;
    std::array<Edge, 4> edge_set;  // first `edges` entries used
};

const ClassInfo& info(SubgraphClass c) {
    // Support-graph automorphism orders: direct products of the component
    // symmetries times permutations of identical components.
    static const std::array<ClassInfo, 18> table = {{
        {"p3", 2, 3, 2, {Edge(0, 1), Edge(1, 2)}},
        {"2k2", 2, 4, 8, {Edge(0, 1), Edge(2, 3)}},
        {"k3", 3, 3, 6, {Edge(0, 1), Edge(0, 2), Edge(1, 2)}},
        {"p4", 3, 4, 2, {Edge(0, 1), Edge(1, 2), Edge(2, 3)}},
        {"k1_3", 3, 4, 6, {Edge(0, 1), Edge(0, 2), Edge(0, 3)}},
        {"p3_k2", 3, 5, 4, {Edge(0, 1), Edge(1, 2), Edge(3, 4)}},
        {"3k2", 3, 6, 48, {Edge(0, 1), Edge(2, 3), Edge(4, 5)}},
        {"paw", 4, 4, 2, {Edge(0, 1), Edge(0, 2), Edge(1, 2), Edge(2, 3)}},
        {"k3_k2", 4, 5, 12, {Edge(0, 1), Edge(0, 2), Edge(1, 2), Edge(3, 4)}},
        {"c4", 4, 4, 8, {Edge(0, 1), Edge(1, 2), Edge(2, 3), Edge(0, 3)}},
        {"p5", 4, 5, 2, {Edge(0, 1), Edge(1, 2), Edge(2, 3), Edge(3, 4)}},
        {"fork", 4, 5, 2, {Edge(0, 1), Edge(0, 2), Edge(0, 3), Edge(3, 4)}},
        {"k1_4", 4, 5, 24, {Edge(0, 1), Edge(0, 2), Edge(0, 3), Edge(0, 4)}},
        {"p4_k2", 4, 6, 4, {Edge(0, 1), Edge(1, 2), Edge(2, 3), Edge(4, 5)}},
        {"k1_3_k2", 4, 6, 12, {Edge(0, 1), Edge(0, 2), Edge(0, 3), Edge(4, 5)}},
        {"2p3", 4, 6, 8, {Edge(0, 1), Edge(1, 2), Edge(3, 4), Edge(4, 5)}},
        {"p3_2k2", 4, 7, 16, {Edge(0, 1), Edge(1, 2), Edge(3, 4), Edge(5, 6)}},
        {"4k2", 4, 8, 384, {Edge(0, 1), Edge(2, 3), Edge(4, 5), Edge(6, 7)}},
    }};
    return table[static_cast<std::size_t>(c)];
}

}  // namespace

std::string_view class_name(SubgraphClass c) { return info(c).name; }
int class_edge_count(SubgraphClass c) { return info(c).edges; }
int class_support(SubgraphClass c) { return info(c).support; }

std::vector<Edge> class_edges(SubgraphClass c) {
    const ClassInfo& ci = info(c);
    return {ci.edge_set.begin(), ci.edge_set.begin() + ci.edges};
}

LabeledGraph class_embedding(SubgraphClass c, int n) {
    if (n < class_support(c))
        throw InputError(std::string(class_name(c)) + " does not embed in " + std::to_string(n) +
                         " vertices");
    auto e = class_edges(c);
    return LabeledGraph(n, e);
}

AutClosedForm class_aut_form(SubgraphClass c) { return {info(c).aut_coeff, info(c).support}; }

Int class_aut_order(SubgraphClass c, std::int64_t n) {
    auto [coeff, deficit] = class_aut_form(c);
    if (n < deficit)
        throw InputError(std::string(class_name(c)) + " does not embed in " + std::to_string(n) +
                         " vertices");
    return Int(coeff) * factorial(n - deficit);
}

}  // namespace ebg
