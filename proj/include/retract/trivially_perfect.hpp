#pragma once

#include "retract/certificate.hpp"
#include "retract/cotree.hpp"
#include "retract/graph.hpp"

namespace retract {

class NotTriviallyPerfectError : public GraphError {
public:
    explicit NotTriviallyPerfectError(const char* which)
        : GraphError(std::string(which) + " is not trivially perfect") {}
};

// True iff the cotree has no join node with two non-leaf children (no C4).
bool is_trivially_perfect(const Cotree& t);

// Retract decision for two trivially perfect graphs: strip matched universal
// vertices of connected parts, match components of disconnected parts by
// bipartite matching over a memoized retract table. NO reasons are one of
// "universal-count", "clique-mismatch", "matching-deficit".
RetractResult tp_retract(const Graph& g, const Graph& h);

}  // namespace retract
