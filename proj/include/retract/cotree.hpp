#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "retract/graph.hpp"

namespace retract {

enum class NodeKind : std::uint8_t { Leaf, Union, Join };

using NodeId = int;

// Rooted decomposition tree stored as an arena. Leaves carry vertex ids;
// internal nodes are Union (disjoint union of children) or Join (complete
// join of children). Trees produced by build_cotree and normalize satisfy:
// every internal node has >= 2 children and kinds alternate along every
// root-to-leaf path.
class Cotree {
public:
    struct Node {
        NodeKind kind = NodeKind::Leaf;
        Vertex vertex = -1;
        std::vector<NodeId> children;
    };

    Cotree() = default;

    static Cotree leaf(Vertex v);
    // Builds kind(children...) without normalizing.
    static Cotree make(NodeKind kind, std::vector<Cotree> children);

    NodeId root() const { return root_; }
    const Node& node(NodeId id) const { return nodes_[static_cast<std::size_t>(id)]; }
    std::size_t node_count() const { return nodes_.size(); }
    bool empty() const { return nodes_.empty(); }

    // Number of leaves.
    int order() const;
    VertexList leaves(NodeId id) const;
    VertexList leaves() const { return leaves(root_); }

    // Parent links and a children-before-parents ordering of all nodes.
    std::vector<NodeId> parents() const;
    std::vector<NodeId> postorder() const;

    NodeId add_node(Node n);
    void set_root(NodeId r) { root_ = r; }

    // Checks leaf bijection onto 0..n-1, arity and kind alternation.
    bool well_formed(std::string* why = nullptr) const;

private:
    std::vector<Node> nodes_;
    NodeId root_ = -1;
};

class NotCographError : public GraphError {
public:
    explicit NotCographError(VertexList p4)
        : GraphError("graph is not a cograph (induced P4 on " + describe(p4) + ")"), witness_(std::move(p4)) {}

    const VertexList& witness() const { return witness_; }

private:
    static std::string describe(const VertexList& v);
    VertexList witness_;
};

struct CographRecognition {
    std::optional<Cotree> cotree;
    VertexList p4;  // a-b-c-d path when not a cograph
};

CographRecognition recognize_cograph(const Graph& g);
// Throws NotCographError carrying an induced P4.
Cotree build_cotree(const Graph& g);

Graph cotree_to_graph(const Cotree& t);
Cotree normalize(const Cotree& t);
// Swaps Union and Join everywhere; realizes the complement graph.
Cotree flip_kinds(const Cotree& t);

// Clique number of every node's subgraph, indexed by NodeId.
std::vector<int> subtree_clique_numbers(const Cotree& t);
int clique_number(const Cotree& t);
// Cographs are perfect; the same recursion yields the chromatic number.
int chromatic_number(const Cotree& t);

// Proper coloring of the subtree's vertices with clique_number colors,
// returned as (vertex, color) pairs in leaf order.
std::vector<std::pair<Vertex, int>> optimal_coloring(const Cotree& t, NodeId id);
std::vector<std::pair<Vertex, int>> optimal_coloring(const Cotree& t, NodeId id, const std::vector<int>& omega);
// Vertices of one maximum clique under id, lowest-indexed choices first.
VertexList maximum_clique(const Cotree& t, NodeId id);
VertexList maximum_clique(const Cotree& t, NodeId id, const std::vector<int>& omega);

// Cotree ASCII grammar: cotree := INT | KIND '(' cotree (',' cotree)+ ')',
// KIND in {J, U}; whitespace ignored.
std::string to_string(const Cotree& t);
Cotree parse_cotree(std::string_view text);

// Equal keys iff the trees are isomorphic as unordered kind-labeled trees.
std::string canonical_key(const Cotree& t);
std::string canonical_key(const Cotree& t, NodeId id);

// Interns canonical shapes as small integers so that isomorphic subtrees
// from any number of trees compare by id.
class ShapeInterner {
public:
    int leaf() { return intern(NodeKind::Leaf, {}); }
    int intern(NodeKind kind, std::vector<int> child_shapes);
    // Shape id of every node of t.
    std::vector<int> shapes(const Cotree& t);

private:
    std::map<std::pair<NodeKind, std::vector<int>>, int> table_;
};

enum class GraphClassKind { Threshold, TriviallyPerfect, Cograph, NotCograph };

struct GraphClass {
    GraphClassKind kind;
    // P4 for NotCograph, C4 for Cograph, 2K2 for TriviallyPerfect, empty for Threshold.
    VertexList witness;
};

GraphClass classify(const Graph& g);
std::string_view class_name(GraphClassKind k);

}  // namespace retract
