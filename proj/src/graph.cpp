#include "retract/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "retract/rng.hpp"

namespace retract {

Graph::Graph(int n) {
    if (n < 0) throw GraphError("negative vertex count");
    adj_.resize(static_cast<std::size_t>(n));
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
        if (u == v) throw GraphError("self-loop at " + std::to_string(u));
        adj_[static_cast<std::size_t>(u)].push_back(v);
        adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& row : adj_) {
        std::sort(row.begin(), row.end());
        row.erase(std::unique(row.begin(), row.end()), row.end());
        edge_count_ += row.size();
    }
    edge_count_ /= 2;
}

Graph Graph::complete(int n) {
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph(n, e);
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    const auto& row = neighbors(u);
    return std::binary_search(row.begin(), row.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (int u = 0; u < order(); ++u)
        for (Vertex v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph complement(const Graph& g) {
    const int n = g.order();
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u) {
        const auto& row = g.neighbors(u);
        auto it = std::upper_bound(row.begin(), row.end(), u);
        for (int v = u + 1; v < n; ++v) {
            if (it != row.end() && *it == v) {
                ++it;
                continue;
            }
            e.emplace_back(u, v);
        }
    }
    return Graph(n, e);
}

std::vector<VertexList> components(const Graph& g) {
    const int n = g.order();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<VertexList> out;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        VertexList comp{s};
        seen[s] = 1;
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (Vertex w : g.neighbors(comp[i]))
                if (!seen[w]) {
                    seen[w] = 1;
                    comp.push_back(w);
                }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_connected(const Graph& g) { return g.order() <= 1 || components(g).size() == 1; }

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
    std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
    VertexList to_parent;
    for (Vertex v : vertices) {
        if (v < 0 || v >= g.order()) throw GraphError("vertex " + std::to_string(v) + " out of range");
        if (index[v] != -1) throw GraphError("duplicate vertex " + std::to_string(v));
        index[v] = static_cast<int>(to_parent.size());
        to_parent.push_back(v);
    }
    std::vector<Edge> e;
    for (std::size_t i = 0; i < to_parent.size(); ++i)
        for (Vertex w : g.neighbors(to_parent[i]))
            if (index[w] > static_cast<int>(i)) e.emplace_back(static_cast<int>(i), index[w]);
    return {Graph(static_cast<int>(to_parent.size()), e), std::move(to_parent)};
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    auto e = g.edges();
    for (auto [u, v] : h.edges()) e.emplace_back(u + g.order(), v + g.order());
    return Graph(g.order() + h.order(), e);
}

Graph join(const Graph& g, const Graph& h) {
    auto e = g.edges();
    for (auto [u, v] : h.edges()) e.emplace_back(u + g.order(), v + g.order());
    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < h.order(); ++v) e.emplace_back(u, v + g.order());
    return Graph(g.order() + h.order(), e);
}

VertexList universal_vertices(const Graph& g) {
    VertexList out;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == g.order() - 1) out.push_back(v);
    return out;
}

VertexList isolated_vertices(const Graph& g) {
    VertexList out;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 0) out.push_back(v);
    return out;
}

std::vector<int> distances_from(const Graph& g, Vertex src) {
    std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
    std::queue<Vertex> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        Vertex u = q.front();
        q.pop();
        for (Vertex w : g.neighbors(u))
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
    }
    return dist;
}

std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
    if (g.order() > 64) throw GraphError("adjacency_masks needs at most 64 vertices");
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(g.order()), 0);
    for (int u = 0; u < g.order(); ++u)
        for (Vertex v : g.neighbors(u)) rows[u] |= std::uint64_t{1} << v;
    return rows;
}

namespace {

// Splits `verts` into a random number of nonempty parts and recurses with
// the opposite kind, adding join edges where required.
void grow_cotree(Rng& rng, VertexList verts, bool join_kind, std::vector<Edge>& edges) {
    if (verts.size() <= 1) return;
    const int max_parts = std::min<int>(static_cast<int>(verts.size()), 4);
    const int parts = rng.range(2, max_parts);
    for (std::size_t i = verts.size(); i > 1; --i) std::swap(verts[i - 1], verts[rng.below(i)]);
    std::vector<VertexList> groups(static_cast<std::size_t>(parts));
    for (int p = 0; p < parts; ++p) groups[p].push_back(verts[p]);
    for (std::size_t i = static_cast<std::size_t>(parts); i < verts.size(); ++i)
        groups[rng.below(static_cast<std::uint64_t>(parts))].push_back(verts[i]);
    if (join_kind)
        for (int a = 0; a < parts; ++a)
            for (int b = a + 1; b < parts; ++b)
                for (Vertex u : groups[a])
                    for (Vertex v : groups[b]) edges.emplace_back(u, v);
    for (auto& grp : groups) grow_cotree(rng, std::move(grp), !join_kind, edges);
}

}  // namespace

Graph random_cograph(int n, std::uint64_t seed) {
    if (n < 1) throw GraphError("random_cograph needs n >= 1");
    Rng rng(seed);
    VertexList verts(static_cast<std::size_t>(n));
    std::iota(verts.begin(), verts.end(), 0);
    std::vector<Edge> edges;
    const bool root_join = rng.chance(50);
    grow_cotree(rng, std::move(verts), root_join, edges);
    return Graph(n, edges);
}

Graph random_graph(int n, int percent, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.chance(percent)) e.emplace_back(u, v);
    return Graph(n, e);
}

}  // namespace retract
