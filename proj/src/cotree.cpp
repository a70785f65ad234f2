#include "retract/cotree.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "retract/threshold.hpp"

namespace retract {

Cotree Cotree::leaf(Vertex v) {
    Cotree t;
    t.root_ = t.add_node({NodeKind::Leaf, v, {}});
    return t;
}

Cotree Cotree::make(NodeKind kind, std::vector<Cotree> children) {
    Cotree t;
    Node top{kind, -1, {}};
    for (auto& c : children) {
        const NodeId offset = static_cast<NodeId>(t.nodes_.size());
        for (auto n : c.nodes_) {
            for (auto& ch : n.children) ch += offset;
            t.nodes_.push_back(std::move(n));
        }
        top.children.push_back(c.root_ + offset);
    }
    t.root_ = t.add_node(std::move(top));
    return t;
}

NodeId Cotree::add_node(Node n) {
    nodes_.push_back(std::move(n));
    return static_cast<NodeId>(nodes_.size() - 1);
}

int Cotree::order() const {
    int n = 0;
    for (const auto& nd : nodes_)
        if (nd.kind == NodeKind::Leaf) ++n;
    return n;
}

VertexList Cotree::leaves(NodeId id) const {
    VertexList out;
    std::vector<NodeId> stack{id};
    while (!stack.empty()) {
        const NodeId cur = stack.back();
        stack.pop_back();
        const auto& nd = node(cur);
        if (nd.kind == NodeKind::Leaf) {
            out.push_back(nd.vertex);
            continue;
        }
        for (auto it = nd.children.rbegin(); it != nd.children.rend(); ++it) stack.push_back(*it);
    }
    return out;
}

std::vector<NodeId> Cotree::parents() const {
    std::vector<NodeId> par(nodes_.size(), -1);
    for (std::size_t i = 0; i < nodes_.size(); ++i)
        for (NodeId c : nodes_[i].children) par[static_cast<std::size_t>(c)] = static_cast<NodeId>(i);
    return par;
}

std::vector<NodeId> Cotree::postorder() const {
    std::vector<NodeId> order;
    if (root_ < 0) return order;
    std::vector<std::pair<NodeId, bool>> stack{{root_, false}};
    while (!stack.empty()) {
        auto [id, expanded] = stack.back();
        stack.pop_back();
        if (expanded) {
            order.push_back(id);
            continue;
        }
        stack.emplace_back(id, true);
        const auto& ch = node(id).children;
        for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.emplace_back(*it, false);
    }
    return order;
}

bool Cotree::well_formed(std::string* why) const {
    auto fail = [&](std::string msg) {
        if (why) *why = std::move(msg);
        return false;
    };
    if (root_ < 0) return fail("empty tree");
    const int n = order();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    const auto par = parents();
    for (NodeId id : postorder()) {
        const auto& nd = node(id);
        if (nd.kind == NodeKind::Leaf) {
            if (nd.vertex < 0 || nd.vertex >= n || seen[nd.vertex]) return fail("leaves are not a permutation of 0..n-1");
            seen[nd.vertex] = 1;
            continue;
        }
        if (nd.children.size() < 2) return fail("internal node with fewer than two children");
        const NodeId p = par[static_cast<std::size_t>(id)];
        if (p >= 0 && node(p).kind == nd.kind) return fail("kinds do not alternate");
    }
    return true;
}

std::string NotCographError::describe(const VertexList& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "-" : "") + std::to_string(v[i]);
    return s;
}

namespace {

// Scratch space for recognition over vertex subsets of one graph.
class Recognizer {
public:
    explicit Recognizer(const Graph& g) : g_(g), stamp_(static_cast<std::size_t>(g.order()), 0) {}

    std::vector<VertexList> components(const VertexList& s) {
        const int in = next_stamp();
        for (Vertex v : s) stamp_[v] = in;
        const int done = next_stamp();
        std::vector<VertexList> out;
        for (Vertex root : s) {
            if (stamp_[root] != in) continue;
            VertexList comp{root};
            stamp_[root] = done;
            for (std::size_t i = 0; i < comp.size(); ++i)
                for (Vertex w : g_.neighbors(comp[i]))
                    if (stamp_[w] == in) {
                        stamp_[w] = done;
                        comp.push_back(w);
                    }
            out.push_back(std::move(comp));
        }
        return out;
    }

    // Components of the complement restricted to s, in O(|s| + |E(s)|).
    std::vector<VertexList> cocomponents(const VertexList& s) {
        VertexList unvisited = s;
        std::vector<VertexList> out;
        while (!unvisited.empty()) {
            VertexList comp{unvisited.back()};
            unvisited.pop_back();
            for (std::size_t i = 0; i < comp.size() && !unvisited.empty(); ++i) {
                const int adj = next_stamp();
                for (Vertex w : g_.neighbors(comp[i])) stamp_[w] = adj;
                VertexList keep;
                for (Vertex w : unvisited) {
                    if (stamp_[w] == adj)
                        keep.push_back(w);
                    else
                        comp.push_back(w);
                }
                unvisited.swap(keep);
            }
            out.push_back(std::move(comp));
        }
        return out;
    }

    // Induced P4 a-b-c-d inside s; s must induce a graph that is connected
    // and co-connected with at least two vertices, so one exists.
    VertexList find_p4(const VertexList& s) {
        const int in = next_stamp();
        for (Vertex v : s) stamp_[v] = in;
        std::vector<int> nb_b(static_cast<std::size_t>(g_.order()), 0);
        int round = 0;
        for (Vertex b : s) {
            ++round;
            for (Vertex w : g_.neighbors(b)) nb_b[w] = round;
            for (Vertex c : g_.neighbors(b)) {
                if (stamp_[c] != in) continue;
                for (Vertex a : g_.neighbors(b)) {
                    if (a == c || stamp_[a] != in || g_.adjacent(a, c)) continue;
                    for (Vertex d : g_.neighbors(c)) {
                        if (d == b || stamp_[d] != in || nb_b[d] == round || d == a) continue;
                        if (!g_.adjacent(a, d)) return {a, b, c, d};
                    }
                }
            }
        }
        return {};
    }

private:
    int next_stamp() { return ++counter_; }

    const Graph& g_;
    std::vector<int> stamp_;
    int counter_ = 0;
};

}  // namespace

CographRecognition recognize_cograph(const Graph& g) {
    CographRecognition res;
    if (g.order() == 0) return res;
    Recognizer rec(g);
    Cotree t;
    struct Work {
        VertexList set;
        NodeId parent;
        int known;  // 0 unknown, 1 connected, 2 co-connected
    };
    VertexList all(static_cast<std::size_t>(g.order()));
    std::iota(all.begin(), all.end(), 0);
    std::vector<Work> stack;
    stack.push_back({std::move(all), -1, 0});
    bool root_set = false;
    std::vector<std::vector<NodeId>> pending;  // children appended after creation
    while (!stack.empty()) {
        Work w = std::move(stack.back());
        stack.pop_back();
        auto attach = [&](Cotree::Node nd) {
            const NodeId id = t.add_node(std::move(nd));
            if (w.parent >= 0)
                pending[static_cast<std::size_t>(w.parent)].push_back(id);
            if (!root_set) {
                t.set_root(id);
                root_set = true;
            }
            pending.resize(t.node_count());
            return id;
        };
        if (w.set.size() == 1) {
            attach({NodeKind::Leaf, w.set[0], {}});
            continue;
        }
        if (w.known != 1) {
            auto comps = rec.components(w.set);
            if (comps.size() > 1) {
                const NodeId id = attach({NodeKind::Union, -1, {}});
                for (auto it = comps.rbegin(); it != comps.rend(); ++it) stack.push_back({std::move(*it), id, 1});
                continue;
            }
        }
        auto cocomps = rec.cocomponents(w.set);
        if (cocomps.size() > 1) {
            const NodeId id = attach({NodeKind::Join, -1, {}});
            for (auto it = cocomps.rbegin(); it != cocomps.rend(); ++it) stack.push_back({std::move(*it), id, 2});
            continue;
        }
        res.p4 = rec.find_p4(w.set);
        return res;
    }
    // Rebuild with children lists filled in.
    Cotree out;
    std::vector<NodeId> remap(t.node_count());
    for (std::size_t i = 0; i < t.node_count(); ++i) {
        auto nd = t.node(static_cast<NodeId>(i));
        nd.children = pending[i];
        remap[i] = out.add_node(std::move(nd));
    }
    out.set_root(remap[static_cast<std::size_t>(t.root())]);
    res.cotree = std::move(out);
    return res;
}

Cotree build_cotree(const Graph& g) {
    auto r = recognize_cograph(g);
    if (!r.cotree) throw NotCographError(r.p4);
    return std::move(*r.cotree);
}

Graph cotree_to_graph(const Cotree& t) {
    const int n = t.order();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (NodeId id : t.postorder()) {
        const auto& nd = t.node(id);
        if (nd.kind != NodeKind::Leaf) continue;
        if (nd.vertex < 0 || nd.vertex >= n) throw GraphError("cotree leaf id out of range");
        if (seen[nd.vertex]) throw GraphError("duplicate cotree leaf " + std::to_string(nd.vertex));
        seen[nd.vertex] = 1;
    }
    std::vector<Edge> edges;
    for (NodeId id : t.postorder()) {
        const auto& nd = t.node(id);
        if (nd.kind != NodeKind::Join) continue;
        std::vector<VertexList> parts;
        for (NodeId c : nd.children) parts.push_back(t.leaves(c));
        for (std::size_t a = 0; a < parts.size(); ++a)
            for (std::size_t b = a + 1; b < parts.size(); ++b)
                for (Vertex u : parts[a])
                    for (Vertex v : parts[b]) edges.emplace_back(u, v);
    }
    return Graph(n, edges);
}

Cotree normalize(const Cotree& t) {
    Cotree out;
    // Returns the new node id for the subtree at id, flattening same-kind
    // children and dropping single-child internals.
    std::vector<NodeId> built(t.node_count(), -1);
    for (NodeId id : t.postorder()) {
        const auto& nd = t.node(id);
        if (nd.kind == NodeKind::Leaf) {
            built[id] = out.add_node({NodeKind::Leaf, nd.vertex, {}});
            continue;
        }
        std::vector<NodeId> kids;
        for (NodeId c : nd.children) {
            const NodeId nc = built[c];
            const auto& cn = out.node(nc);
            if (cn.kind == nd.kind)
                kids.insert(kids.end(), cn.children.begin(), cn.children.end());
            else
                kids.push_back(nc);
        }
        if (kids.size() == 1)
            built[id] = kids[0];
        else
            built[id] = out.add_node({nd.kind, -1, std::move(kids)});
    }
    // Compact away nodes orphaned by flattening.
    Cotree compact;
    std::vector<NodeId> map(out.node_count(), -1);
    out.set_root(built[t.root()]);
    for (NodeId id : out.postorder()) {
        auto nd = out.node(id);
        for (auto& c : nd.children) c = map[c];
        map[id] = compact.add_node(std::move(nd));
    }
    compact.set_root(map[out.root()]);
    return compact;
}

Cotree flip_kinds(const Cotree& t) {
    Cotree out;
    for (std::size_t i = 0; i < t.node_count(); ++i) {
        auto nd = t.node(static_cast<NodeId>(i));
        if (nd.kind == NodeKind::Union)
            nd.kind = NodeKind::Join;
        else if (nd.kind == NodeKind::Join)
            nd.kind = NodeKind::Union;
        out.add_node(std::move(nd));
    }
    out.set_root(t.root());
    return out;
}

std::vector<int> subtree_clique_numbers(const Cotree& t) {
    std::vector<int> w(t.node_count(), 0);
    for (NodeId id : t.postorder()) {
        const auto& nd = t.node(id);
        if (nd.kind == NodeKind::Leaf) {
            w[id] = 1;
        } else if (nd.kind == NodeKind::Union) {
            for (NodeId c : nd.children) w[id] = std::max(w[id], w[c]);
        } else {
            for (NodeId c : nd.children) w[id] += w[c];
        }
    }
    return w;
}

int clique_number(const Cotree& t) { return t.empty() ? 0 : subtree_clique_numbers(t)[t.root()]; }

int chromatic_number(const Cotree& t) {
    if (t.empty()) return 0;
    int best = 0;
    for (auto [v, c] : optimal_coloring(t, t.root())) best = std::max(best, c + 1);
    return best;
}

std::vector<std::pair<Vertex, int>> optimal_coloring(const Cotree& t, NodeId id, const std::vector<int>& omega) {
    std::vector<std::pair<Vertex, int>> out;
    // (node, color offset)
    std::vector<std::pair<NodeId, int>> stack{{id, 0}};
    while (!stack.empty()) {
        auto [cur, offset] = stack.back();
        stack.pop_back();
        const auto& nd = t.node(cur);
        if (nd.kind == NodeKind::Leaf) {
            out.emplace_back(nd.vertex, offset);
        } else if (nd.kind == NodeKind::Union) {
            for (auto it = nd.children.rbegin(); it != nd.children.rend(); ++it) stack.emplace_back(*it, offset);
        } else {
            std::vector<std::pair<NodeId, int>> kids;
            int off = offset;
            for (NodeId c : nd.children) {
                kids.emplace_back(c, off);
                off += omega[c];
            }
            for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
        }
    }
    return out;
}

std::vector<std::pair<Vertex, int>> optimal_coloring(const Cotree& t, NodeId id) {
    return optimal_coloring(t, id, subtree_clique_numbers(t));
}

VertexList maximum_clique(const Cotree& t, NodeId id) { return maximum_clique(t, id, subtree_clique_numbers(t)); }

VertexList maximum_clique(const Cotree& t, NodeId id, const std::vector<int>& omega) {
    VertexList out;
    std::vector<NodeId> stack{id};
    while (!stack.empty()) {
        const NodeId cur = stack.back();
        stack.pop_back();
        const auto& nd = t.node(cur);
        if (nd.kind == NodeKind::Leaf) {
            out.push_back(nd.vertex);
        } else if (nd.kind == NodeKind::Join) {
            for (NodeId c : nd.children) stack.push_back(c);
        } else {
            NodeId best = nd.children.front();
            for (NodeId c : nd.children)
                if (omega[c] > omega[best]) best = c;
            stack.push_back(best);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string to_string(const Cotree& t) {
    std::string out;
    // Emits tokens with an explicit stack: (node, next child index).
    std::vector<std::pair<NodeId, std::size_t>> stack{{t.root(), 0}};
    while (!stack.empty()) {
        auto& [id, next] = stack.back();
        const auto& nd = t.node(id);
        if (nd.kind == NodeKind::Leaf) {
            out += std::to_string(nd.vertex);
            stack.pop_back();
            continue;
        }
        if (next == 0) out += nd.kind == NodeKind::Join ? "J(" : "U(";
        if (next == nd.children.size()) {
            out += ')';
            stack.pop_back();
            continue;
        }
        if (next > 0) out += ',';
        const NodeId child = nd.children[next++];
        stack.emplace_back(child, 0);
    }
    return out;
}

Cotree parse_cotree(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    std::size_t pos = 0;
    Cotree t;
    auto fail = [&](const std::string& msg) -> GraphError {
        return GraphError("cotree parse error at offset " + std::to_string(pos) + ": " + msg);
    };
    // Iterative descent: frames hold the kind and collected children.
    struct Frame {
        NodeKind kind;
        std::vector<NodeId> children;
    };
    std::vector<Frame> frames;
    NodeId last = -1;
    auto finish = [&](NodeId id) {
        if (frames.empty()) {
            if (last >= 0) throw fail("trailing input");
            last = id;
        } else {
            frames.back().children.push_back(id);
        }
    };
    while (pos < s.size()) {
        const char c = s[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long long v = 0;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
                v = v * 10 + (s[pos++] - '0');
                if (v > 100000000) throw fail("leaf id too large");
            }
            finish(t.add_node({NodeKind::Leaf, static_cast<Vertex>(v), {}}));
        } else if (c == 'J' || c == 'U') {
            if (pos + 1 >= s.size() || s[pos + 1] != '(') throw fail("expected '(' after kind");
            frames.push_back({c == 'J' ? NodeKind::Join : NodeKind::Union, {}});
            pos += 2;
            continue;
        } else if (c == ',') {
            if (frames.empty() || frames.back().children.empty()) throw fail("unexpected ','");
            ++pos;
            continue;
        } else if (c == ')') {
            if (frames.empty()) throw fail("unbalanced ')'");
            Frame f = std::move(frames.back());
            frames.pop_back();
            if (f.children.size() < 2) throw fail("internal node needs at least two children");
            ++pos;
            finish(t.add_node({f.kind, -1, std::move(f.children)}));
            continue;
        } else {
            throw fail(std::string("unexpected character '") + c + "'");
        }
        if (pos < s.size() && s[pos] != ',' && s[pos] != ')') throw fail("expected ',' or ')'");
    }
    if (!frames.empty() || last < 0) throw fail("incomplete cotree");
    t.set_root(last);
    std::string why;
    // Arity was enforced while parsing; alternation is not required of input.
    const int n = t.order();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 0; i < t.node_count(); ++i) {
        const auto& nd = t.node(static_cast<NodeId>(i));
        if (nd.kind != NodeKind::Leaf) continue;
        if (nd.vertex >= n || seen[nd.vertex]) throw GraphError("cotree leaves must be a permutation of 0..n-1");
        seen[nd.vertex] = 1;
    }
    return t;
}

namespace {

void append_key(const Cotree& t, NodeId id, std::vector<std::string>& memo) {
    const auto& nd = t.node(id);
    if (nd.kind == NodeKind::Leaf) {
        memo[id] = "L";
        return;
    }
    std::vector<std::string> parts;
    for (NodeId c : nd.children) parts.push_back(memo[c]);
    std::sort(parts.begin(), parts.end());
    std::string key = nd.kind == NodeKind::Join ? "J(" : "U(";
    for (std::size_t i = 0; i < parts.size(); ++i) key += (i ? "," : "") + parts[i];
    key += ')';
    memo[id] = std::move(key);
}

}  // namespace

std::string canonical_key(const Cotree& t, NodeId id) {
    std::vector<std::string> memo(t.node_count());
    std::vector<NodeId> order;
    for (NodeId n : t.postorder()) order.push_back(n);
    for (NodeId n : order) append_key(t, n, memo);
    return memo[id];
}

std::string canonical_key(const Cotree& t) { return canonical_key(t, t.root()); }

int ShapeInterner::intern(NodeKind kind, std::vector<int> child_shapes) {
    std::sort(child_shapes.begin(), child_shapes.end());
    auto [it, inserted] = table_.try_emplace({kind, std::move(child_shapes)}, static_cast<int>(table_.size()));
    return it->second;
}

std::vector<int> ShapeInterner::shapes(const Cotree& t) {
    std::vector<int> out(t.node_count(), -1);
    for (NodeId id : t.postorder()) {
        const auto& nd = t.node(id);
        std::vector<int> kids;
        for (NodeId c : nd.children) kids.push_back(out[c]);
        out[id] = intern(nd.kind, std::move(kids));
    }
    return out;
}

GraphClass classify(const Graph& g) {
    if (threshold_elimination(g)) return {GraphClassKind::Threshold, {}};
    auto rec = recognize_cograph(g);
    if (!rec.cotree) return {GraphClassKind::NotCograph, rec.p4};
    const Cotree& t = *rec.cotree;
    // A join with two non-leaf (union) children contains C4; a union with
    // two non-leaf (join) children contains 2K2.
    VertexList two_k2;
    for (NodeId id : t.postorder()) {
        const auto& nd = t.node(id);
        std::vector<NodeId> inner;
        for (NodeId c : nd.children)
            if (t.node(c).kind != NodeKind::Leaf) inner.push_back(c);
        if (inner.size() < 2) continue;
        // Two vertices from different children of each inner node.
        auto pick = [&](NodeId c) {
            const auto& cn = t.node(c);
            return std::pair{t.leaves(cn.children[0]).front(), t.leaves(cn.children[1]).front()};
        };
        auto [a, b] = pick(inner[0]);
        auto [c, d] = pick(inner[1]);
        if (nd.kind == NodeKind::Join) return {GraphClassKind::Cograph, {a, c, b, d}};
        if (two_k2.empty()) two_k2 = {a, b, c, d};
    }
    return {GraphClassKind::TriviallyPerfect, two_k2};
}

std::string_view class_name(GraphClassKind k) {
    switch (k) {
        case GraphClassKind::Threshold: return "threshold";
        case GraphClassKind::TriviallyPerfect: return "trivially_perfect";
        case GraphClassKind::Cograph: return "cograph";
        case GraphClassKind::NotCograph: return "not_cograph";
    }
    return "?";
}

}  // namespace retract
