#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "retract/cotree.hpp"
#include "retract/graph.hpp"

namespace retract {

struct AbsoluteVerdict {
    bool is_absolute = false;
    int omega = 0;
    // For each vertex, the largest clique through it (size omega exactly
    // when the vertex qualifies).
    std::vector<VertexList> cliques;
    // Lowest failing vertex and a supergraph with H induced on 0..n-1,
    // equal clique number and no retraction onto H. Set on false.
    std::optional<Vertex> failing_vertex;
    std::optional<Graph> counterexample;
};

class NotAbsoluteCandidateError : public GraphError {
public:
    using GraphError::GraphError;
};

// Throws NotAbsoluteCandidateError on disconnected input and
// NotCographError on non-cographs.
AbsoluteVerdict is_absolute_retract(const Graph& h);

// Adds a true twin of a maximum-clique vertex inside the smaller branch of
// a union node above the first failing vertex. Throws
// NotAbsoluteCandidateError when H is an absolute retract.
Graph counterexample_embedding(const Graph& h);

// Random connected cograph G containing H induced on 0..n-1 with
// omega(G) = omega(H) and up to `extra` new vertices.
Graph random_cograph_extension(const Graph& h, int extra, std::uint64_t seed);

}  // namespace retract
