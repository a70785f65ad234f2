#pragma once

#include <optional>
#include <string_view>

#include "retract/certificate.hpp"
#include "retract/cotree.hpp"
#include "retract/graph.hpp"

namespace retract {

// Homomorphism test for cographs via chi(G) <= omega(H). The witness colors
// G optimally and sends color i to the i-th vertex of a maximum clique of H.
// Throws NotCographError.
std::optional<VertexMap> hom_exists(const Graph& g, const Graph& h);

// H given as an induced subgraph of G. H's vertex i is hset[i].
struct PartitionedInstance {
    Graph g;
    VertexList hset;

    Graph pattern() const { return induced_subgraph(g, hset).graph; }
};

// Fixpoint pruning of union-node children that hold no pattern vertex and
// whose clique number is at most that of a present sibling. YES iff only
// pattern vertices survive; gamma is then the inclusion of hset.
RetractResult partitioned_retract(const PartitionedInstance& inst);

// One pruning step on the current graph (for step-wise testing): returns
// the vertices of a prunable branch, or empty when at the fixpoint.
VertexList partitioned_prune_step(const PartitionedInstance& inst);

// Fixed-parameter solver on cotrees: surjective assignments of H's
// cocomponents to G's cocomponents at join roots, bipartite matching of
// components at union roots, memoized on canonical shapes.
RetractResult fpt_retract(const Graph& g, const Graph& h);
RetractResult fpt_retract(const Cotree& g, const Cotree& h);

enum class Route { Threshold, TriviallyPerfect, Fpt, Partitioned, Oracle };
std::string_view route_name(Route r);

struct Decision {
    RetractResult result;
    Route route;
};

// Classifies both graphs and routes to the fastest applicable solver.
// Throws NotCographError when either input is not a cograph.
Decision retract(const Graph& g, const Graph& h);

}  // namespace retract
