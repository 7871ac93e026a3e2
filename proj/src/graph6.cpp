#include "ebg/graph6.hpp"

#include "ebg/errors.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

namespace ebg {

namespace {

constexpr std::int64_t kMaxN = 68719476735;  // 36-bit limit of the format

void strip(std::string_view& s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
}

int take_sextet(std::string_view& s) {
    if (s.empty()) throw InputError("graph6: truncated input");
    unsigned char c = static_cast<unsigned char>(s.front());
    if (c < 63 || c > 126) throw InputError("graph6: character out of range");
    s.remove_prefix(1);
    return c - 63;
}

std::int64_t parse_order(std::string_view& s) {
    if (s.empty()) throw InputError("graph6: empty input");
    if (s.front() != '~') return take_sextet(s);
    s.remove_prefix(1);
    if (s.empty()) throw InputError("graph6: truncated order");
    int groups = 3;
    if (s.front() == '~') {
        s.remove_prefix(1);
        groups = 6;
    }
    std::int64_t n = 0;
    for (int i = 0; i < groups; ++i) n = (n << 6) | take_sextet(s);
    return n;
}

void emit_order(std::string& out, std::int64_t n) {
    auto push_groups = [&out, n](int groups) {
        for (int i = groups - 1; i >= 0; --i)
            out.push_back(static_cast<char>(((n >> (6 * i)) & 63) + 63));
    };
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back('~');
        push_groups(3);
    } else {
        out.append("~~");
        push_groups(6);
    }
}

}  // namespace

LabeledGraph parse_graph6(std::string_view text) {
    strip(text);
    if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
    std::int64_t n64 = parse_order(text);
    if (n64 < 0 || n64 > kMaxN) throw InputError("graph6: bad vertex count");
    if (n64 > 1000000) throw InputError("graph6: vertex count too large for this tool");
    int n = static_cast<int>(n64);

    std::int64_t nbits = static_cast<std::int64_t>(n) * (n - 1) / 2;
    std::int64_t nbytes = (nbits + 5) / 6;
    if (static_cast<std::int64_t>(text.size()) != nbytes)
        throw InputError("graph6: body length mismatch (expected " + std::to_string(nbytes) +
                         " bytes, got " + std::to_string(text.size()) + ")");

    LabeledGraph g(n);
    int cur = 0, have = 0;
    int i = 0, j = 1;
    for (std::int64_t b = 0; b < nbits; ++b) {
        if (have == 0) {
            cur = take_sextet(text);
            have = 6;
        }
        --have;
        if ((cur >> have) & 1) g.add_edge(i, j);
        if (++i == j) {
            i = 0;
            ++j;
        }
    }
    if (have > 0 && (cur & ((1 << have) - 1)) != 0)
        throw InputError("graph6: nonzero padding bits");
    return g;
}

std::string emit_graph6(const LabeledGraph& g) {
    std::string out;
    emit_order(out, g.n());
    int cur = 0, have = 0;
    for (int j = 1; j < g.n(); ++j) {
        for (int i = 0; i < j; ++i) {
            cur = (cur << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++have == 6) {
                out.push_back(static_cast<char>(cur + 63));
                cur = 0;
                have = 0;
            }
        }
    }
    if (have > 0) out.push_back(static_cast<char>((cur << (6 - have)) + 63));
    return out;
}

LabeledGraph parse_edge_list(std::string_view text, std::optional<int> n) {
    std::vector<Edge> edges;
    int max_v = -1;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        long long u, v;
        if (!(ls >> u)) continue;  // blank line
        if (!(ls >> v)) throw InputError("edge list: missing endpoint on line " + std::to_string(lineno));
        long long rest;
        if (ls >> rest) throw InputError("edge list: trailing tokens on line " + std::to_string(lineno));
        if (u < 0 || v < 0 || u > 1000000 || v > 1000000)
            throw InputError("edge list: endpoint out of range on line " + std::to_string(lineno));
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        max_v = std::max(max_v, static_cast<int>(std::max(u, v)));
    }
    int nn = n.value_or(max_v + 1);
    return LabeledGraph(nn, edges);
}

}  // namespace ebg
