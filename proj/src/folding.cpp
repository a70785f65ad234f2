#include "retract/folding.hpp"

#include <algorithm>

#include "retract/canon.hpp"
#include "retract/cotree.hpp"
#include "retract/oracle.hpp"
#include "retract/threshold.hpp"

namespace retract {

bool is_complete_coloring(const Graph& g, const CompleteColoring& c) {
    const int n = g.order();
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    for (std::size_t k = 0; k < c.classes.size(); ++k) {
        if (c.classes[k].empty()) return false;
        for (Vertex v : c.classes[k]) {
            if (v < 0 || v >= n || color[v] >= 0) return false;
            color[v] = static_cast<int>(k);
        }
    }
    if (std::count(color.begin(), color.end(), -1) > 0) return false;
    const std::size_t k = c.classes.size();
    std::vector<char> joined(k * k, 0);
    for (auto [u, v] : g.edges()) {
        if (color[u] == color[v]) return false;
        joined[color[u] * k + color[v]] = joined[color[v] * k + color[u]] = 1;
    }
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a + 1; b < k; ++b)
            if (!joined[a * k + b]) return false;
    return true;
}

Graph apply_fold(const Graph& g, Vertex x, Vertex y) {
    const int n = g.order();
    if (x < 0 || y < 0 || x >= n || y >= n) throw GraphError("fold vertex out of range");
    if (x == y) throw GraphError("cannot fold a vertex onto itself");
    if (g.adjacent(x, y)) throw GraphError("fold of adjacent vertices");
    const auto& nx = g.neighbors(x);
    const auto& ny = g.neighbors(y);
    VertexList common;
    std::set_intersection(nx.begin(), nx.end(), ny.begin(), ny.end(), std::back_inserter(common));
    if (common.empty()) throw GraphError("fold of vertices at distance greater than two");
    auto shift = [y](Vertex v) { return v > y ? v - 1 : v; };
    const Vertex xs = shift(x);
    std::vector<Edge> e;
    for (auto [u, v] : g.edges()) {
        const Vertex a = u == y ? xs : shift(u);
        const Vertex b = v == y ? xs : shift(v);
        e.emplace_back(a, b);
    }
    return Graph(n - 1, e);
}

bool verify_fold_sequence(const Graph& g, const FoldSequence& seq, const Graph& target) {
    VertexList labels = seq.component;
    Graph cur = g;
    if (!labels.empty()) {
        auto comps = components(g);
        VertexList sorted = labels;
        std::sort(sorted.begin(), sorted.end());
        if (std::find(comps.begin(), comps.end(), sorted) == comps.end()) return false;
        cur = induced_subgraph(g, labels).graph;
    } else {
        labels.resize(static_cast<std::size_t>(g.order()));
        for (int v = 0; v < g.order(); ++v) labels[v] = v;
    }
    for (auto [x, y] : seq.folds) {
        auto ix = std::find(labels.begin(), labels.end(), x);
        auto iy = std::find(labels.begin(), labels.end(), y);
        if (ix == labels.end() || iy == labels.end()) return false;
        try {
            cur = apply_fold(cur, static_cast<Vertex>(ix - labels.begin()), static_cast<Vertex>(iy - labels.begin()));
        } catch (const GraphError&) {
            return false;
        }
        labels.erase(iy);
    }
    return isomorphic(cur, target);
}

FoldingNumber threshold_folding_number(const Graph& g) {
    if (!threshold_elimination(g)) throw NotThresholdError("G");
    if (g.order() == 0) return {0, {}};
    // The component with the largest clique carries chi(G).
    const auto comps = components(g);
    const VertexList* best = nullptr;
    int best_omega = 0;
    for (const auto& c : comps) {
        const int w = clique_number(build_cotree(induced_subgraph(g, c).graph));
        if (w > best_omega) {
            best_omega = w;
            best = &c;
        }
    }
    const auto sub = induced_subgraph(g, *best);
    FoldingNumber res{best_omega, {*best, {}}};
    const Cotree t = build_cotree(sub.graph);
    std::vector<VertexList> classes(static_cast<std::size_t>(best_omega));
    for (auto [v, c] : optimal_coloring(t, t.root())) classes[c].push_back(v);
    Graph cur = sub.graph;
    VertexList labels = sub.to_parent;
    try {
        for (auto& cls : classes) {
            std::sort(cls.begin(), cls.end());
            for (std::size_t i = 1; i < cls.size(); ++i) {
                const Vertex x = sub.to_parent[cls[0]], y = sub.to_parent[cls[i]];
                auto ix = std::find(labels.begin(), labels.end(), x) - labels.begin();
                auto iy = std::find(labels.begin(), labels.end(), y) - labels.begin();
                cur = apply_fold(cur, static_cast<Vertex>(ix), static_cast<Vertex>(iy));
                labels.erase(labels.begin() + iy);
                res.sequence.folds.emplace_back(x, y);
            }
        }
    } catch (const GraphError&) {
        if (g.order() > 8) throw;
        auto r = brute_folding_number(g);
        return {r.value, r.sequence};
    }
    return res;
}

int folding_number_universal(const Graph& g, const SearchBudget& budget) {
    if (universal_vertices(g).empty()) throw GraphError("graph has no universal vertex");
    Graph cur = g;
    int stripped = 0;
    while (cur.order() > 0) {
        const auto u = universal_vertices(cur);
        if (u.empty()) break;
        VertexList keep;
        for (int v = 0, i = 0; v < cur.order(); ++v) {
            if (i < static_cast<int>(u.size()) && u[i] == v) {
                ++i;
                continue;
            }
            keep.push_back(v);
        }
        stripped += static_cast<int>(u.size());
        cur = induced_subgraph(cur, keep).graph;
    }
    if (cur.order() == 0) return stripped;
    return stripped + brute_achromatic(cur, budget).value;
}

int folding_number_universal(const Graph& g) {
    return folding_number_universal(g, SearchBudget::achromatic_default().with_env_override());
}

}  // namespace retract
