#pragma once

#include <cstdint>
#include <vector>

#include "retract/graph.hpp"

namespace retract {

// Canonical code of a graph: vertex count followed by the upper-triangle
// adjacency bits under a canonical labeling. Equal codes iff isomorphic.
struct CanonicalCode {
    int n = 0;
    std::vector<std::uint64_t> bits;

    auto operator<=>(const CanonicalCode&) const = default;
};

// Colour refinement plus individualization, pruning branches that only
// permute twins. Intended for small graphs (tens of vertices).
CanonicalCode canonical_code(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

// Relabel g by perm: vertex v becomes perm[v].
Graph relabel(const Graph& g, const VertexList& perm);

}  // namespace retract
