#include "retract/cograph_retract.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "retract/matching.hpp"
#include "retract/threshold.hpp"
#include "retract/trivially_perfect.hpp"

namespace retract {

std::optional<VertexMap> hom_exists(const Graph& g, const Graph& h) {
    const Cotree tg = build_cotree(g);
    const Cotree th = build_cotree(h);
    if (chromatic_number(tg) > clique_number(th)) return std::nullopt;
    const VertexList clique = maximum_clique(th, th.root());
    VertexMap map{VertexList(static_cast<std::size_t>(g.order()))};
    for (auto [v, c] : optimal_coloring(tg, tg.root())) map.image[v] = clique[static_cast<std::size_t>(c)];
    return map;
}

namespace {

// Mutable view of G's cotree for the pruning fixpoint. Pruning never
// changes a clique number: a branch goes only when a present sibling has at
// least its clique number, so the parent's maximum is kept.
class Pruner {
public:
    explicit Pruner(const PartitionedInstance& inst)
        : tree_(build_cotree(inst.g)), omega_(subtree_clique_numbers(tree_)), alive_(tree_.node_count(), 1) {
        std::vector<char> in_h(static_cast<std::size_t>(inst.g.order()), 0);
        for (Vertex v : inst.hset) {
            if (v < 0 || v >= inst.g.order() || in_h[v]) throw GraphError("hset must list distinct vertices of G");
            in_h[v] = 1;
        }
        pattern_leaves_.assign(tree_.node_count(), 0);
        for (NodeId id : tree_.postorder()) {
            const auto& nd = tree_.node(id);
            if (nd.kind == NodeKind::Leaf)
                pattern_leaves_[id] = in_h[nd.vertex];
            else
                for (NodeId c : nd.children) pattern_leaves_[id] += pattern_leaves_[c];
        }
    }

    // Finds a prunable (branch, dominating sibling) pair in postorder.
    std::optional<std::pair<NodeId, NodeId>> find() const {
        for (NodeId id : tree_.postorder()) {
            const auto& nd = tree_.node(id);
            if (nd.kind != NodeKind::Union || !alive_[id]) continue;
            for (NodeId c : nd.children) {
                if (!alive_[c] || pattern_leaves_[c] > 0) continue;
                for (NodeId s : nd.children)
                    if (s != c && alive_[s] && omega_[s] >= omega_[c]) return std::pair{c, s};
            }
        }
        return std::nullopt;
    }

    void remove(NodeId branch) {
        for (NodeId id : subtree(branch)) alive_[id] = 0;
    }

    // Maximum clique among present vertices under id.
    VertexList live_clique(NodeId id) const {
        VertexList out;
        std::vector<NodeId> stack{id};
        while (!stack.empty()) {
            const NodeId cur = stack.back();
            stack.pop_back();
            const auto& nd = tree_.node(cur);
            if (nd.kind == NodeKind::Leaf) {
                out.push_back(nd.vertex);
            } else if (nd.kind == NodeKind::Join) {
                for (NodeId c : nd.children) stack.push_back(c);
            } else {
                NodeId best = -1;
                for (NodeId c : nd.children)
                    if (alive_[c] && (best < 0 || omega_[c] > omega_[best])) best = c;
                stack.push_back(best);
            }
        }
        return out;
    }

    std::vector<NodeId> subtree(NodeId id) const {
        std::vector<NodeId> out{id};
        for (std::size_t i = 0; i < out.size(); ++i)
            for (NodeId c : tree_.node(out[i]).children) out.push_back(c);
        return out;
    }

    const Cotree& tree() const { return tree_; }
    bool alive(NodeId id) const { return alive_[id] != 0; }

private:
    Cotree tree_;
    std::vector<int> omega_;
    std::vector<char> alive_;
    std::vector<int> pattern_leaves_;
};

}  // namespace

VertexList partitioned_prune_step(const PartitionedInstance& inst) {
    Pruner p(inst);
    auto hit = p.find();
    if (!hit) return {};
    auto leaves = p.tree().leaves(hit->first);
    std::sort(leaves.begin(), leaves.end());
    return leaves;
}

RetractResult partitioned_retract(const PartitionedInstance& inst) {
    Pruner p(inst);
    const int n = inst.g.order();
    VertexList target(static_cast<std::size_t>(n), -1);
    VertexList pruned_order;
    while (auto hit = p.find()) {
        auto [branch, sibling] = *hit;
        const VertexList clique = p.live_clique(sibling);
        for (auto [v, c] : optimal_coloring(p.tree(), branch)) {
            target[v] = clique[static_cast<std::size_t>(c)];
            pruned_order.push_back(v);
        }
        p.remove(branch);
    }
    std::vector<int> h_index(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < inst.hset.size(); ++i) h_index[inst.hset[i]] = static_cast<int>(i);
    std::vector<char> gone(static_cast<std::size_t>(n), 0);
    for (Vertex v : pruned_order) gone[v] = 1;
    for (Vertex v = 0; v < n; ++v)
        if (!gone[v] && h_index[v] < 0)
            return RetractResult::reject("vertex " + std::to_string(v) + " outside the pattern survives pruning");

    RetractCertificate cert{VertexMap{VertexList(static_cast<std::size_t>(n), -1)},
                            VertexMap{inst.hset}};
    for (Vertex v = 0; v < n; ++v)
        if (!gone[v]) cert.rho.image[v] = h_index[v];
    // Later prunes resolve first: a target is either a survivor or pruned later.
    for (auto it = pruned_order.rbegin(); it != pruned_order.rend(); ++it)
        cert.rho.image[*it] = cert.rho.image[target[*it]];
    return RetractResult::accept(std::move(cert));
}

namespace {

// H-side expression: the join of a list of H nodes (a single node when the
// list has one element).
using HExpr = std::vector<NodeId>;

class FptSolver {
public:
    FptSolver(const Cotree& g, const Cotree& h, RetractCertificate& cert)
        : g_(g), h_(h), g_omega_(subtree_clique_numbers(g)), h_omega_(subtree_clique_numbers(h)),
          g_shape_(interner_.shapes(g)), h_shape_(interner_.shapes(h)), cert_(cert) {
        g_size_.assign(g.node_count(), 0);
        for (NodeId id : g.postorder()) {
            const auto& nd = g.node(id);
            g_size_[id] = nd.kind == NodeKind::Leaf ? 1 : 0;
            for (NodeId c : nd.children) g_size_[id] += g_size_[c];
        }
        h_size_.assign(h.node_count(), 0);
        for (NodeId id : h.postorder()) {
            const auto& nd = h.node(id);
            h_size_[id] = nd.kind == NodeKind::Leaf ? 1 : 0;
            for (NodeId c : nd.children) h_size_[id] += h_size_[c];
        }
    }

    bool solve(NodeId gn, const HExpr& hx) {
        if (g_omega_[gn] != omega(hx) || size(hx) > g_size_[gn]) return false;
        const std::uint64_t key = (static_cast<std::uint64_t>(g_shape_[gn]) << 32) | static_cast<std::uint32_t>(shape(hx));
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        bool ok = false;
        switch (g_.node(gn).kind) {
            case NodeKind::Leaf: ok = hx.size() == 1 && h_.node(hx[0]).kind == NodeKind::Leaf; break;
            case NodeKind::Join: ok = first_assignment(gn, hx).has_value(); break;
            case NodeKind::Union: ok = saturating(gn, hx).has_value(); break;
        }
        memo_.emplace(key, ok);
        return ok;
    }

    void build(NodeId gn, const HExpr& hx) {
        const auto& nd = g_.node(gn);
        if (nd.kind == NodeKind::Leaf) {
            const Vertex y = h_.node(hx[0]).vertex;
            cert_.rho.image[nd.vertex] = y;
            cert_.gamma.image[y] = nd.vertex;
            return;
        }
        if (nd.kind == NodeKind::Join) {
            const auto assignment = *first_assignment(gn, hx);
            const auto co = cocomponents(hx);
            for (std::size_t i = 0; i < nd.children.size(); ++i) build(nd.children[i], part(co, assignment, static_cast<int>(i)));
            return;
        }
        const auto comps = components(hx);
        const auto partner = *saturating(gn, hx);
        std::vector<char> used(nd.children.size(), 0);
        for (std::size_t j = 0; j < comps.size(); ++j) {
            used[static_cast<std::size_t>(partner[j])] = 1;
            build(nd.children[static_cast<std::size_t>(partner[j])], comps[j]);
        }
        VertexList clique;
        for (NodeId n : hx) {
            auto q = maximum_clique(h_, n, h_omega_);
            clique.insert(clique.end(), q.begin(), q.end());
        }
        for (std::size_t i = 0; i < nd.children.size(); ++i) {
            if (used[i]) continue;
            for (auto [v, c] : optimal_coloring(g_, nd.children[i], g_omega_))
                cert_.rho.image[v] = clique[static_cast<std::size_t>(c)];
        }
    }

private:
    int omega(const HExpr& hx) const {
        int w = 0;
        for (NodeId n : hx) w += h_omega_[n];
        return w;
    }

    int size(const HExpr& hx) const {
        int s = 0;
        for (NodeId n : hx) s += h_size_[n];
        return s;
    }

    int shape(const HExpr& hx) {
        if (hx.size() == 1) return h_shape_[hx[0]];
        std::vector<int> kids;
        for (NodeId n : hx) kids.push_back(h_shape_[n]);
        return interner_.intern(NodeKind::Join, std::move(kids));
    }

    // Cocomponents of a connected expression; empty when it is disconnected.
    std::vector<NodeId> cocomponents(const HExpr& hx) const {
        if (hx.size() > 1) return hx;
        const auto& nd = h_.node(hx[0]);
        if (nd.kind == NodeKind::Join) return nd.children;
        if (nd.kind == NodeKind::Leaf) return hx;
        return {};
    }

    std::vector<HExpr> components(const HExpr& hx) const {
        if (hx.size() == 1 && h_.node(hx[0]).kind == NodeKind::Union) {
            std::vector<HExpr> out;
            for (NodeId c : h_.node(hx[0]).children) out.push_back({c});
            return out;
        }
        return {hx};
    }

    static HExpr part(const std::vector<NodeId>& co, const std::vector<int>& assignment, int target) {
        HExpr out;
        for (std::size_t j = 0; j < co.size(); ++j)
            if (assignment[j] == target) out.push_back(co[j]);
        return out;
    }

    // Lexicographically first surjective assignment of H cocomponents to the
    // children of join node gn under which every child retracts to its part.
    std::optional<std::vector<int>> first_assignment(NodeId gn, const HExpr& hx) {
        const auto& kids = g_.node(gn).children;
        const auto co = cocomponents(hx);
        const int p = static_cast<int>(kids.size()), q = static_cast<int>(co.size());
        if (q < p) return std::nullopt;
        std::vector<int> assignment(static_cast<std::size_t>(q), -1);
        std::vector<int> load(static_cast<std::size_t>(p), 0);   // clique number assigned so far
        std::vector<int> count(static_cast<std::size_t>(p), 0);  // parts assigned so far
        int empty_children = p;
        std::optional<std::vector<int>> found;
        auto rec = [&](auto&& self, int j) -> bool {
            if (q - j < empty_children) return false;
            if (j == q) {
                for (int i = 0; i < p; ++i)
                    if (load[i] != g_omega_[kids[i]]) return false;
                for (int i = 0; i < p; ++i)
                    if (!solve(kids[i], part(co, assignment, i))) return false;
                found = assignment;
                return true;
            }
            const int w = h_omega_[co[j]];
            for (int i = 0; i < p; ++i) {
                if (load[i] + w > g_omega_[kids[i]]) continue;
                assignment[j] = i;
                load[i] += w;
                if (count[i]++ == 0) --empty_children;
                const bool done = self(self, j + 1);
                if (--count[i] == 0) ++empty_children;
                load[i] -= w;
                if (done) return true;
            }
            assignment[j] = -1;
            return false;
        };
        rec(rec, 0);
        return found;
    }

    // For union node gn: partner child of gn for every component of hx under
    // a matching saturating hx's components.
    std::optional<std::vector<int>> saturating(NodeId gn, const HExpr& hx) {
        const auto& kids = g_.node(gn).children;
        const auto comps = components(hx);
        if (comps.size() > kids.size()) return std::nullopt;
        BipartiteInstance inst{static_cast<int>(kids.size()), static_cast<int>(comps.size()), {}};
        for (std::size_t i = 0; i < kids.size(); ++i)
            for (std::size_t j = 0; j < comps.size(); ++j)
                if (solve(kids[i], comps[j])) inst.edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
        auto m = max_matching(inst);
        if (!saturates_right(m, inst.right)) return std::nullopt;
        return right_partners(m, inst.right);
    }

    const Cotree& g_;
    const Cotree& h_;
    ShapeInterner interner_;
    std::vector<int> g_omega_, h_omega_;
    std::vector<int> g_shape_, h_shape_;
    std::vector<int> g_size_, h_size_;
    std::unordered_map<std::uint64_t, bool> memo_;
    RetractCertificate& cert_;
};

}  // namespace

RetractResult fpt_retract(const Cotree& g_in, const Cotree& h_in) {
    const Cotree g = normalize(g_in);
    const Cotree h = normalize(h_in);
    const int wg = clique_number(g), wh = clique_number(h);
    if (wg != wh) return RetractResult::reject("clique numbers differ (" + std::to_string(wg) + " vs " + std::to_string(wh) + ")");
    RetractCertificate cert{VertexMap{VertexList(static_cast<std::size_t>(g.order()), -1)},
                            VertexMap{VertexList(static_cast<std::size_t>(h.order()), -1)}};
    FptSolver solver(g, h, cert);
    const HExpr top{h.root()};
    if (!solver.solve(g.root(), top)) return RetractResult::reject("no cotree assignment retracts");
    solver.build(g.root(), top);
    return RetractResult::accept(std::move(cert));
}

RetractResult fpt_retract(const Graph& g, const Graph& h) { return fpt_retract(build_cotree(g), build_cotree(h)); }

std::string_view route_name(Route r) {
    switch (r) {
        case Route::Threshold: return "threshold";
        case Route::TriviallyPerfect: return "tp";
        case Route::Fpt: return "fpt";
        case Route::Partitioned: return "partitioned";
        case Route::Oracle: return "oracle";
    }
    return "?";
}

Decision retract(const Graph& g, const Graph& h) {
    const auto cg = classify(g);
    if (cg.kind == GraphClassKind::NotCograph) throw NotCographError(cg.witness);
    const auto ch = classify(h);
    if (ch.kind == GraphClassKind::NotCograph) throw NotCographError(ch.witness);
    if (cg.kind == GraphClassKind::Threshold && ch.kind == GraphClassKind::Threshold)
        return {threshold_retract(g, h), Route::Threshold};
    auto at_most_tp = [](GraphClassKind k) { return k == GraphClassKind::Threshold || k == GraphClassKind::TriviallyPerfect; };
    if (at_most_tp(cg.kind) && at_most_tp(ch.kind)) return {tp_retract(g, h), Route::TriviallyPerfect};
    return {fpt_retract(g, h), Route::Fpt};
}

}  // namespace retract
