#pragma once

#include "ebg/graph.hpp"
#include "ebg/ints.hpp"

#include <array>
#include <string_view>
#include <vector>

namespace ebg {

// Isomorphism classes of graphs with 2, 3, and 4 edges and no isolated
// vertices. These are the template subgraphs whose counts the census and the
// balance checks work with.
enum class SubgraphClass {
    // 2 edges
    P3,
    TwoK2,
    // 3 edges
    K3,
    P4,
    K13,
    P3K2,
    ThreeK2,
    // 4 edges
    Paw,
    K3K2,
    C4,
    P5,
    Fork,
    K14,
    P4K2,
    K13K2,
    TwoP3,
    P3TwoK2,
    FourK2,
};

inline constexpr std::array<SubgraphClass, 2> kClasses2 = {SubgraphClass::P3, SubgraphClass::TwoK2};
inline constexpr std::array<SubgraphClass, 5> kClasses3 = {
    SubgraphClass::K3, SubgraphClass::P4, SubgraphClass::K13, SubgraphClass::P3K2,
    SubgraphClass::ThreeK2};
inline constexpr std::array<SubgraphClass, 11> kClasses4 = {
    SubgraphClass::Paw,  SubgraphClass::K3K2,  SubgraphClass::C4,      SubgraphClass::P5,
    SubgraphClass::Fork, SubgraphClass::K14,   SubgraphClass::P4K2,    SubgraphClass::K13K2,
    SubgraphClass::TwoP3, SubgraphClass::P3TwoK2, SubgraphClass::FourK2};

std::string_view class_name(SubgraphClass c);
int class_edge_count(SubgraphClass c);
// Number of non-isolated vertices; also the smallest n the class embeds into.
int class_support(SubgraphClass c);
// Canonical edge set of the class on vertices {0..support-1}.
std::vector<Edge> class_edges(SubgraphClass c);
// The class embedded in a graph on n vertices (padding with isolated ones).
LabeledGraph class_embedding(SubgraphClass c, int n);

// |Aut(H)| for the class embedded on n labeled vertices: coeff * (n - support)!
// The coefficient is the automorphism order of the support graph.
struct AutClosedForm {
    std::int64_t coeff;
    int deficit;  // == class_support
};
AutClosedForm class_aut_form(SubgraphClass c);
Int class_aut_order(SubgraphClass c, std::int64_t n);

}  // namespace ebg
