#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace retract {

using Vertex = int;
using VertexList = std::vector<Vertex>;
using Edge = std::pair<Vertex, Vertex>;

class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Simple undirected graph on dense vertex ids 0..n-1. Neighbor lists are
// kept sorted so iteration order is deterministic and membership is a
// binary search.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, std::span<const Edge> edges);

    static Graph complete(int n);
    static Graph empty(int n) { return Graph(n); }

    int order() const { return static_cast<int>(adj_.size()); }
    std::size_t size() const { return edge_count_; }

    const VertexList& neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
    bool adjacent(Vertex u, Vertex v) const;

    std::vector<Edge> edges() const;

    bool operator==(const Graph&) const = default;

private:
    std::vector<VertexList> adj_;
    std::size_t edge_count_ = 0;
};

struct InducedSubgraph {
    Graph graph;
    VertexList to_parent;  // new id -> original id
};

Graph complement(const Graph& g);

// Connected components, each sorted, ordered by smallest member.
std::vector<VertexList> components(const Graph& g);
bool is_connected(const Graph& g);

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

// Disjoint union (g's vertices first) and join.
Graph disjoint_union(const Graph& g, const Graph& h);
Graph join(const Graph& g, const Graph& h);

VertexList universal_vertices(const Graph& g);
VertexList isolated_vertices(const Graph& g);

// BFS distances from src; -1 for unreachable vertices.
std::vector<int> distances_from(const Graph& g, Vertex src);

// Adjacency rows as 64-bit masks; only valid when order() <= 64.
std::vector<std::uint64_t> adjacency_masks(const Graph& g);

// Deterministic random cograph realized from a random cotree.
Graph random_cograph(int n, std::uint64_t seed);

// Erdos-Renyi G(n, p) with p = percent/100; deterministic for a seed.
Graph random_graph(int n, int percent, std::uint64_t seed);

}  // namespace retract
