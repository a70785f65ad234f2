#include "retract/trivially_perfect.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "retract/matching.hpp"

namespace retract {

bool is_trivially_perfect(const Cotree& t) {
    for (std::size_t i = 0; i < t.node_count(); ++i) {
        const auto& nd = t.node(static_cast<NodeId>(i));
        if (nd.kind != NodeKind::Join) continue;
        int inner = 0;
        for (NodeId c : nd.children)
            if (t.node(c).kind != NodeKind::Leaf) ++inner;
        if (inner > 1) return false;
    }
    return true;
}

namespace {

// A trivially perfect cotree seen as nested pieces. A connected piece is a
// run of universal vertices joined with an optional union node; a
// disconnected piece (no universals) is a union node alone.
struct Piece {
    const Vertex* universal = nullptr;
    int u = 0;
    NodeId rest = -1;

    bool empty() const { return u == 0 && rest < 0; }
    bool connected() const { return u > 0; }
    Piece drop(int k) const { return {universal + k, u - k, rest}; }
};

class TreeView {
public:
    explicit TreeView(const Cotree& t) : tree(t), omega(subtree_clique_numbers(t)) {
        leaf_children.resize(t.node_count());
        union_child.assign(t.node_count(), -1);
        for (std::size_t i = 0; i < t.node_count(); ++i) {
            const auto& nd = t.node(static_cast<NodeId>(i));
            if (nd.kind == NodeKind::Leaf) {
                leaf_children[i].push_back(nd.vertex);
            } else if (nd.kind == NodeKind::Join) {
                for (NodeId c : nd.children) {
                    if (t.node(c).kind == NodeKind::Leaf)
                        leaf_children[i].push_back(t.node(c).vertex);
                    else
                        union_child[i] = c;
                }
            }
        }
    }

    Piece piece(NodeId id) const {
        if (tree.node(id).kind == NodeKind::Union) return {nullptr, 0, id};
        const auto& uv = leaf_children[static_cast<std::size_t>(id)];
        return {uv.data(), static_cast<int>(uv.size()), union_child[static_cast<std::size_t>(id)]};
    }

    std::vector<Piece> components(const Piece& p) const {
        if (p.connected()) return {p};
        std::vector<Piece> out;
        if (p.rest >= 0)
            for (NodeId c : tree.node(p.rest).children) out.push_back(piece(c));
        return out;
    }

    int clique(const Piece& p) const { return p.u + (p.rest >= 0 ? omega[p.rest] : 0); }

    VertexList max_clique(const Piece& p) const {
        VertexList q(p.universal, p.universal + p.u);
        if (p.rest >= 0) {
            auto more = maximum_clique(tree, p.rest, omega);
            q.insert(q.end(), more.begin(), more.end());
        }
        return q;
    }

    // Proper coloring with clique(p) colors.
    std::vector<std::pair<Vertex, int>> coloring(const Piece& p) const {
        std::vector<std::pair<Vertex, int>> out;
        for (int i = 0; i < p.u; ++i) out.emplace_back(p.universal[i], i);
        if (p.rest >= 0)
            for (auto [v, c] : optimal_coloring(tree, p.rest, omega)) out.emplace_back(v, c + p.u);
        return out;
    }

    const Cotree& tree;
    std::vector<int> omega;
    std::vector<VertexList> leaf_children;
    std::vector<NodeId> union_child;
};

class TpSolver {
public:
    TpSolver(const Cotree& g, const Cotree& h, RetractCertificate& cert) : g_(g), h_(h), cert_(cert) {
        g_union_.assign(g.node_count(), -2);
        h_union_.assign(h.node_count(), -2);
    }

    Piece g_root() const { return g_.piece(g_.tree.root()); }
    Piece h_root() const { return h_.piece(h_.tree.root()); }

    bool solve(const Piece& gp, const Piece& hp) {
        if (gp.empty() || hp.empty()) return gp.empty() && hp.empty();
        if (g_.clique(gp) != h_.clique(hp)) return false;
        const std::uint64_t key = (static_cast<std::uint64_t>(shape(gp, g_, g_union_)) << 32) |
                                  static_cast<std::uint32_t>(shape(hp, h_, h_union_));
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        bool ok;
        if (gp.connected()) {
            const int k = gp.u;
            if (!hp.connected() || hp.u < k)
                ok = false;
            else if (hp.rest < 0)
                ok = true;  // H is a clique with matching clique number
            else
                ok = solve({nullptr, 0, gp.rest}, hp.drop(k));
        } else {
            ok = saturating(gp, hp).has_value();
        }
        memo_.emplace(key, ok);
        return ok;
    }

    std::string explain(const Piece& gp, const Piece& hp) {
        if (gp.empty() || hp.empty()) return "universal-count";
        if (gp.connected()) {
            if (g_.clique(gp) != h_.clique(hp)) return "clique-mismatch";
            if (!hp.connected() || hp.u < gp.u) return "universal-count";
            return explain({nullptr, 0, gp.rest}, hp.drop(gp.u));
        }
        if (!saturating(gp, hp)) return "matching-deficit";
        return "unmatched-component";
    }

    // Fills rho/gamma for a pair already known to retract.
    void build(const Piece& gp, const Piece& hp) {
        if (gp.empty()) return;
        if (gp.connected()) {
            const int k = gp.u;
            for (int t = 0; t < k; ++t) pair_up(gp.universal[t], hp.universal[t]);
            const Piece g_rest{nullptr, 0, gp.rest};
            const Piece h_rest = hp.drop(k);
            if (hp.rest < 0) {
                // G - universals onto the clique formed by the remaining universals of H.
                if (g_rest.empty()) return;
                std::map<Vertex, int> color;
                for (auto [v, c] : g_.coloring(g_rest)) {
                    color[v] = c;
                    cert_.rho.image[v] = h_rest.universal[c];
                }
                for (Vertex q : g_.max_clique(g_rest)) cert_.gamma.image[h_rest.universal[color[q]]] = q;
                return;
            }
            build(g_rest, h_rest);
            return;
        }
        auto gcs = g_.components(gp);
        auto hcs = h_.components(hp);
        const auto partner = *saturating(gp, hp);
        std::vector<char> used(gcs.size(), 0);
        for (std::size_t j = 0; j < hcs.size(); ++j) {
            used[static_cast<std::size_t>(partner[j])] = 1;
            build(gcs[static_cast<std::size_t>(partner[j])], hcs[j]);
        }
        // Unmatched components fold onto a maximum clique of H.
        std::size_t best = 0;
        for (std::size_t j = 1; j < hcs.size(); ++j)
            if (h_.clique(hcs[j]) > h_.clique(hcs[best])) best = j;
        const VertexList target = h_.max_clique(hcs[best]);
        for (std::size_t i = 0; i < gcs.size(); ++i) {
            if (used[i]) continue;
            for (auto [v, c] : g_.coloring(gcs[i])) cert_.rho.image[v] = target[static_cast<std::size_t>(c)];
        }
    }

private:
    void pair_up(Vertex x, Vertex y) {
        cert_.rho.image[x] = y;
        cert_.gamma.image[y] = x;
    }

    // Partner G-component of every H-component under a matching that
    // saturates H, or nullopt.
    std::optional<std::vector<int>> saturating(const Piece& gp, const Piece& hp) {
        auto gcs = g_.components(gp);
        auto hcs = h_.components(hp);
        if (hcs.size() > gcs.size()) return std::nullopt;
        BipartiteInstance inst{static_cast<int>(gcs.size()), static_cast<int>(hcs.size()), {}};
        for (std::size_t i = 0; i < gcs.size(); ++i)
            for (std::size_t j = 0; j < hcs.size(); ++j)
                if (solve(gcs[i], hcs[j])) inst.edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
        auto m = max_matching(inst);
        if (!saturates_right(m, inst.right)) return std::nullopt;
        return right_partners(m, inst.right);
    }

    // Canonical id of a piece: connected pieces by (universal count, shape
    // of rest); union nodes by the sorted shapes of their components.
    int shape(const Piece& p, const TreeView& view, std::vector<int>& union_cache) {
        if (!p.connected()) return union_shape(p.rest, view, union_cache);
        const int rest = p.rest >= 0 ? union_shape(p.rest, view, union_cache) : -1;
        auto [it, inserted] = conn_ids_.try_emplace({p.u, rest}, static_cast<int>(2 * conn_ids_.size()));
        return it->second;
    }

    int union_shape(NodeId id, const TreeView& view, std::vector<int>& cache) {
        int& slot = cache[static_cast<std::size_t>(id)];
        if (slot != -2) return slot;
        std::vector<int> kids;
        for (NodeId c : view.tree.node(id).children) kids.push_back(shape(view.piece(c), view, cache));
        std::sort(kids.begin(), kids.end());
        auto [it, inserted] = union_ids_.try_emplace(std::move(kids), static_cast<int>(2 * union_ids_.size() + 1));
        slot = it->second;
        return slot;
    }

    TreeView g_, h_;
    RetractCertificate& cert_;
    std::vector<int> g_union_, h_union_;
    std::map<std::pair<int, int>, int> conn_ids_;
    std::map<std::vector<int>, int> union_ids_;
    std::unordered_map<std::uint64_t, bool> memo_;
};

Cotree tp_cotree(const Graph& g, const char* which) {
    auto rec = recognize_cograph(g);
    if (!rec.cotree || !is_trivially_perfect(*rec.cotree)) throw NotTriviallyPerfectError(which);
    return std::move(*rec.cotree);
}

}  // namespace

RetractResult tp_retract(const Graph& g, const Graph& h) {
    const Cotree tg = tp_cotree(g, "G");
    const Cotree th = tp_cotree(h, "H");
    RetractCertificate cert{VertexMap{VertexList(static_cast<std::size_t>(g.order()), -1)},
                            VertexMap{VertexList(static_cast<std::size_t>(h.order()), -1)}};
    TpSolver solver(tg, th, cert);
    const Piece gp = solver.g_root(), hp = solver.h_root();
    if (!solver.solve(gp, hp)) return RetractResult::reject(solver.explain(gp, hp));
    solver.build(gp, hp);
    return RetractResult::accept(std::move(cert));
}

}  // namespace retract
