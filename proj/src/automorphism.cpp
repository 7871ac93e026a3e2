#include "ebg/automorphism.hpp"

#include "ebg/errors.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace ebg {

namespace {

// Iterated neighbor-class signature refinement to a fixed point. Colors are
// canonical for the graph (automorphisms preserve them), so the backtracking
// below may restrict images to same-color vertices.
std::vector<int> refine_colors(const LabeledGraph& g) {
    int n = g.n();
    std::vector<int> color(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) color[static_cast<std::size_t>(v)] = g.degree(v);
    int classes = 0;
    {
        std::map<int, int> relabel;
        for (int v = 0; v < n; ++v) {
            auto [it, fresh] = relabel.try_emplace(color[static_cast<std::size_t>(v)], classes);
            if (fresh) ++classes;
            color[static_cast<std::size_t>(v)] = it->second;
        }
    }
    for (;;) {
        // signature: own color + sorted multiset of neighbor colors
        std::vector<std::vector<int>> sig(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            auto& s = sig[static_cast<std::size_t>(v)];
            s.push_back(color[static_cast<std::size_t>(v)]);
            g.for_neighbors(v, [&](int w) { s.push_back(color[static_cast<std::size_t>(w)]); });
            std::sort(s.begin() + 1, s.end());
        }
        std::map<std::vector<int>, int> relabel;
        std::vector<int> next(static_cast<std::size_t>(n));
        int next_classes = 0;
        // Sorted-map relabeling keeps color ids a function of the signature
        // multiset, not of vertex order.
        for (int v = 0; v < n; ++v) relabel.try_emplace(sig[static_cast<std::size_t>(v)], 0);
        for (auto& [key, id] : relabel) id = next_classes++;
        for (int v = 0; v < n; ++v)
            next[static_cast<std::size_t>(v)] = relabel.at(sig[static_cast<std::size_t>(v)]);
        if (next_classes == classes) return next;
        color = std::move(next);
        classes = next_classes;
    }
}

// Counts adjacency-preserving bijections by backtracking: vertex i may map
// only onto unused vertices of the same refined color whose adjacency to all
// previously placed images matches.
class BacktrackCounter {
public:
    BacktrackCounter(const LabeledGraph& g, std::vector<int> color, std::int64_t budget)
        : g_(g), color_(std::move(color)), budget_(budget) {
        int n = g_.n();
        order_.resize(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) order_[static_cast<std::size_t>(v)] = v;
        // Small cells first so mismatches prune early.
        std::vector<int> cell_size(static_cast<std::size_t>(n), 0);
        for (int v = 0; v < n; ++v) ++cell_size[static_cast<std::size_t>(color_[static_cast<std::size_t>(v)])];
        std::sort(order_.begin(), order_.end(), [&](int x, int y) {
            auto cx = cell_size[static_cast<std::size_t>(color_[static_cast<std::size_t>(x)])];
            auto cy = cell_size[static_cast<std::size_t>(color_[static_cast<std::size_t>(y)])];
            if (cx != cy) return cx < cy;
            if (g_.degree(x) != g_.degree(y)) return g_.degree(x) > g_.degree(y);
            return x < y;
        });
        image_.assign(static_cast<std::size_t>(n), -1);
        used_.assign(static_cast<std::size_t>(n), false);
    }

    Int count() {
        Int total = 0;
        place(0, total);
        return total;
    }

private:
    void place(int depth, Int& total) {
        int n = g_.n();
        if (depth == n) {
            ++total;
            return;
        }
        int v = order_[static_cast<std::size_t>(depth)];
        for (int w = 0; w < n; ++w) {
            if (used_[static_cast<std::size_t>(w)]) continue;
            if (color_[static_cast<std::size_t>(w)] != color_[static_cast<std::size_t>(v)]) continue;
            if (--budget_ < 0) throw BudgetError("aut_order: backtracking budget exceeded");
            bool ok = true;
            for (int j = 0; j < depth; ++j) {
                int x = order_[static_cast<std::size_t>(j)];
                if (g_.has_edge(v, x) != g_.has_edge(w, image_[static_cast<std::size_t>(x)])) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            image_[static_cast<std::size_t>(v)] = w;
            used_[static_cast<std::size_t>(w)] = true;
            place(depth + 1, total);
            used_[static_cast<std::size_t>(w)] = false;
            image_[static_cast<std::size_t>(v)] = -1;
        }
    }

    const LabeledGraph& g_;
    std::vector<int> color_;
    std::vector<int> order_;
    std::vector<int> image_;
    std::vector<bool> used_;
    std::int64_t budget_;
};

}  // namespace

AutResult aut_order(const LabeledGraph& g, std::int64_t node_budget) {
    // Split off isolated vertices; they contribute a clean factorial.
    std::vector<int> support;
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) > 0) support.push_back(v);
    int isolated = g.n() - static_cast<int>(support.size());

    std::vector<int> remap(static_cast<std::size_t>(g.n()), -1);
    for (std::size_t i = 0; i < support.size(); ++i)
        remap[static_cast<std::size_t>(support[i])] = static_cast<int>(i);
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(g.k()));
    for (const Edge& e : g.edges())
        edges.emplace_back(remap[static_cast<std::size_t>(e.u)], remap[static_cast<std::size_t>(e.v)]);
    LabeledGraph h(static_cast<int>(support.size()), edges);

    AutResult r;
    r.isolated_count = isolated;
    if (h.n() == 0) {
        r.support_order = 1;
    } else {
        BacktrackCounter counter(h, refine_colors(h), node_budget);
        r.support_order = counter.count();
    }
    r.order = r.support_order * factorial(isolated);
    return r;
}

Int template_aut_order(SubgraphClass c, std::int64_t n) { return class_aut_order(c, n); }

IndexReport index_lambda(std::int64_t n, std::int64_t triangle_count, const AutResult& aut_g) {
    if (n < 6) throw InputError("index_lambda: need n >= 6");
    if (triangle_count <= 0) throw InputError("index_lambda: triangle count must be positive");
    if (aut_g.order <= 0) throw InternalError("index_lambda: nonpositive automorphism order");
    IndexReport rep;
    rep.base = n - 3;
    rep.q = Rat(Int(6) * triangle_count, aut_g.order);
    Rat lam = rep.q * Rat(factorial(rep.base));
    if (denominator(lam) != 1)
        throw InputError("index_lambda: index is not integral; inputs are inconsistent");
    rep.lambda = numerator(lam);
    return rep;
}

Rat lambda_for_class(const Int& count, const Int& aut_h, const Int& aut_g) {
    if (aut_g <= 0) throw InputError("lambda_for_class: |Aut(G)| must be positive");
    return Rat(count * aut_h, aut_g);
}

}  // namespace ebg
