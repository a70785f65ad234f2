#pragma once

#include <optional>
#include <vector>

#include "retract/certificate.hpp"
#include "retract/graph.hpp"

namespace retract {

enum class EliminationTag : std::uint8_t { Universal, Isolated };

struct EliminationStep {
    Vertex vertex;
    EliminationTag tag;
    bool operator==(const EliminationStep&) const = default;
};

// Steps in removal order. The final vertex is always tagged Isolated.
using EliminationOrder = std::vector<EliminationStep>;

// Repeatedly removes a universal or isolated vertex in O(n + m); nullopt
// when some residual graph has neither (the graph is not threshold).
std::optional<EliminationOrder> threshold_elimination(const Graph& g);

// Checks that each tagged vertex is universal/isolated at its step.
bool verify_elimination(const Graph& g, const EliminationOrder& order);

class NotThresholdError : public GraphError {
public:
    explicit NotThresholdError(const char* which) : GraphError(std::string(which) + " is not a threshold graph") {}
};

// Linear-time retract decision for two threshold graphs.
RetractResult threshold_retract(const Graph& g, const Graph& h);

// Threshold graph from an elimination sequence: tags[i] says whether the
// i-th removed vertex was universal. Vertex i is the i-th removed.
Graph threshold_from_tags(const std::vector<EliminationTag>& tags);

}  // namespace retract
