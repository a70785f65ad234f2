#include "retract/absolute.hpp"

#include <algorithm>

#include "retract/cograph_retract.hpp"
#include "retract/rng.hpp"

namespace retract {

namespace {

struct Failure {
    Vertex vertex;
    NodeId branch;  // child of a union node with a smaller clique number
};

// Largest clique through v inside the subtree at id.
void clique_through(const Cotree& t, const std::vector<int>& omega, const std::vector<NodeId>& parent, NodeId leaf,
                    VertexList& out) {
    out.push_back(t.node(leaf).vertex);
    for (NodeId c = leaf, p = parent[leaf]; p >= 0; c = p, p = parent[p]) {
        if (t.node(p).kind != NodeKind::Join) continue;
        for (NodeId s : t.node(p).children)
            if (s != c) {
                auto q = maximum_clique(t, s, omega);
                out.insert(out.end(), q.begin(), q.end());
            }
    }
    std::sort(out.begin(), out.end());
}

Cotree candidate_cotree(const Graph& h) {
    if (h.order() == 0 || !is_connected(h)) throw NotAbsoluteCandidateError("H must be a connected graph");
    return build_cotree(h);
}

std::optional<Failure> first_failure(const Cotree& t, const std::vector<int>& omega, const std::vector<NodeId>& parent,
                                     const std::vector<NodeId>& leaf_of) {
    for (Vertex v = 0; v < static_cast<Vertex>(leaf_of.size()); ++v)
        for (NodeId c = leaf_of[v], p = parent[c]; p >= 0; c = p, p = parent[p])
            if (t.node(p).kind == NodeKind::Union && omega[c] < omega[p]) return Failure{v, c};
    return std::nullopt;
}

std::vector<NodeId> leaf_index(const Cotree& t, int n) {
    std::vector<NodeId> leaf_of(static_cast<std::size_t>(n), -1);
    for (NodeId id = 0; id < static_cast<NodeId>(t.node_count()); ++id)
        if (t.node(id).kind == NodeKind::Leaf) leaf_of[t.node(id).vertex] = id;
    return leaf_of;
}

Graph add_true_twin(const Graph& h, Vertex w) {
    auto e = h.edges();
    const Vertex x = h.order();
    e.emplace_back(w, x);
    for (Vertex u : h.neighbors(w)) e.emplace_back(u, x);
    return Graph(h.order() + 1, e);
}

Graph build_counterexample(const Graph& h, const Cotree& t, const std::vector<int>& omega, const Failure& f) {
    const Vertex w = maximum_clique(t, f.branch, omega).front();
    Graph g = add_true_twin(h, w);
    VertexList hset(static_cast<std::size_t>(h.order()));
    for (Vertex v = 0; v < h.order(); ++v) hset[v] = v;
    if (clique_number(build_cotree(g)) != omega[t.root()] || partitioned_retract({g, hset}).yes())
        throw std::logic_error("counterexample construction failed to certify");
    return g;
}

}  // namespace

AbsoluteVerdict is_absolute_retract(const Graph& h) {
    const Cotree t = candidate_cotree(h);
    const auto omega = subtree_clique_numbers(t);
    const auto parent = t.parents();
    const auto leaf_of = leaf_index(t, h.order());
    AbsoluteVerdict res;
    res.omega = omega[t.root()];
    res.cliques.resize(static_cast<std::size_t>(h.order()));
    for (Vertex v = 0; v < h.order(); ++v) clique_through(t, omega, parent, leaf_of[v], res.cliques[v]);
    const auto f = first_failure(t, omega, parent, leaf_of);
    res.is_absolute = !f;
    if (f) {
        res.failing_vertex = f->vertex;
        res.counterexample = build_counterexample(h, t, omega, *f);
    }
    return res;
}

Graph counterexample_embedding(const Graph& h) {
    const Cotree t = candidate_cotree(h);
    const auto omega = subtree_clique_numbers(t);
    const auto f = first_failure(t, omega, t.parents(), leaf_index(t, h.order()));
    if (!f) throw NotAbsoluteCandidateError("H is an absolute retract");
    return build_counterexample(h, t, omega, *f);
}

Graph random_cograph_extension(const Graph& h, int extra, std::uint64_t seed) {
    Rng rng(seed);
    const int target = clique_number(candidate_cotree(h));
    const int add = extra > 0 ? rng.range(1, extra) : 0;
    Graph g = h;
    // K1 has no connected extension with the same clique number.
    for (int done = 0, misses = 0; done < add && misses < 256;) {
        // Cotree nodes are modules: the new vertex copies the module's
        // outside neighborhood and is joined to it or not.
        const Cotree t = build_cotree(g);
        const NodeId x = static_cast<NodeId>(rng.below(t.node_count()));
        const bool joined = rng.chance(50);
        const VertexList inside = t.leaves(x);
        std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
        for (Vertex v : inside) in[v] = 1;
        auto e = g.edges();
        const Vertex nv = g.order();
        for (Vertex w = 0; w < g.order(); ++w) {
            if (in[w] ? joined : g.adjacent(w, inside.front())) e.emplace_back(w, nv);
        }
        Graph next(g.order() + 1, e);
        if (!is_connected(next) || clique_number(build_cotree(next)) != target) {
            ++misses;
            continue;
        }
        g = std::move(next);
        ++done;
    }
    return g;
}

}  // namespace retract
