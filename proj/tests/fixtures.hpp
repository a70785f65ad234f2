#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "retract/cotree.hpp"
#include "retract/graph.hpp"

namespace fixtures {

using retract::Graph;
using retract::Vertex;
using retract::VertexList;

inline Graph from_cotree(const char* text) { return retract::cotree_to_graph(retract::parse_cotree(text)); }

inline Graph butterfly() { return from_cotree("J(0,U(J(1,2),J(3,4)))"); }
inline Graph paw() { return from_cotree("J(0,U(1,J(2,3)))"); }
inline Graph c4() { return from_cotree("J(U(0,1),U(2,3))"); }
inline Graph two_k2() { return from_cotree("U(J(0,1),J(2,3))"); }
inline Graph k(int n) { return Graph::complete(n); }

inline Graph path(int n) {
    std::vector<retract::Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, e);
}

inline VertexList iota(int n) {
    VertexList v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 0);
    return v;
}

// Deliberately naive reference searches: plain enumeration of every map,
// sharing no code with the library's oracle. Only for graphs of a handful
// of vertices.
namespace naive {

inline bool is_hom(const Graph& g, const Graph& h, const VertexList& f) {
    for (auto [u, v] : g.edges())
        if (!h.adjacent(f[u], f[v])) return false;
    return true;
}

// Calls visit(f) for every map V(g) -> V(h) until visit returns true.
template <class F>
bool each_map(int n, int k, F visit) {
    if (k == 0) return n == 0 && visit(VertexList{});
    VertexList f(static_cast<std::size_t>(n), 0);
    while (true) {
        if (visit(f)) return true;
        int i = 0;
        while (i < n && ++f[i] == k) f[i++] = 0;
        if (i == n) return false;
    }
}

inline bool hom(const Graph& g, const Graph& h) {
    return each_map(g.order(), h.order(), [&](const VertexList& f) { return is_hom(g, h, f); });
}

// Some homomorphism rho: G -> H has a homomorphic right inverse gamma.
inline bool retract(const Graph& g, const Graph& h) {
    return each_map(g.order(), h.order(), [&](const VertexList& rho) {
        if (!is_hom(g, h, rho)) return false;
        std::vector<VertexList> fibre(static_cast<std::size_t>(h.order()));
        for (int v = 0; v < g.order(); ++v) fibre[rho[v]].push_back(v);
        for (const auto& f : fibre)
            if (f.empty()) return false;
        VertexList pick(static_cast<std::size_t>(h.order()), 0);
        while (true) {
            VertexList gamma(static_cast<std::size_t>(h.order()));
            for (int y = 0; y < h.order(); ++y) gamma[y] = fibre[y][pick[y]];
            if (is_hom(h, g, gamma)) return true;
            int y = 0;
            while (y < h.order() && ++pick[y] == static_cast<int>(fibre[y].size())) pick[y++] = 0;
            if (y == h.order()) return false;
        }
    });
}

inline int clique(const Graph& g) {
    const int n = g.order();
    int best = 0;
    for (unsigned s = 0; s < (1U << n); ++s) {
        VertexList c;
        for (int v = 0; v < n; ++v)
            if ((s >> v) & 1U) c.push_back(v);
        bool ok = true;
        for (std::size_t i = 0; i < c.size() && ok; ++i)
            for (std::size_t j = i + 1; j < c.size() && ok; ++j) ok = g.adjacent(c[i], c[j]);
        if (ok) best = std::max(best, static_cast<int>(c.size()));
    }
    return best;
}

inline int chromatic(const Graph& g) {
    for (int k = 1; k <= g.order(); ++k)
        if (hom(g, Graph::complete(k))) return k;
    return 0;
}

// Maximum number of classes over all proper complete colorings.
inline int achromatic(const Graph& g) {
    const int n = g.order();
    int best = 0;
    each_map(n, n, [&](const VertexList& c) {
        const int k = *std::max_element(c.begin(), c.end()) + 1;
        if (k <= best) return false;
        std::vector<char> used(static_cast<std::size_t>(k), 0), joined(static_cast<std::size_t>(k * k), 0);
        for (int v : c) used[v] = 1;
        if (std::count(used.begin(), used.end(), 0)) return false;
        for (auto [u, v] : g.edges()) {
            if (c[u] == c[v]) return false;
            joined[c[u] * k + c[v]] = joined[c[v] * k + c[u]] = 1;
        }
        for (int a = 0; a < k; ++a)
            for (int b = a + 1; b < k; ++b)
                if (!joined[a * k + b]) return false;
        best = k;
        return false;
    });
    return best;
}

}  // namespace naive

}  // namespace fixtures
