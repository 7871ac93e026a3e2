#pragma once

#include "ebg/graph.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace ebg {

// graph6 interchange format: packed upper-triangle adjacency bits, big-endian
// within 6-bit groups, printable offset 63. Handles the extended vertex-count
// encodings ('~' and '~~' prefixes).
LabeledGraph parse_graph6(std::string_view text);
std::string emit_graph6(const LabeledGraph& g);

// Secondary ingest format: one "u v" pair per line, 0-based, '#' comments
// allowed. Vertex count defaults to max endpoint + 1.
LabeledGraph parse_edge_list(std::string_view text, std::optional<int> n = std::nullopt);

}  // namespace ebg
