#pragma once

#include <utility>
#include <vector>

#include "retract/graph.hpp"

namespace retract {

struct SearchBudget;

// Folds act on the component `component` of G (all of V(G) when empty) and
// name vertices by their original labels: each (x, y) identifies y into x.
struct FoldSequence {
    VertexList component;
    std::vector<std::pair<Vertex, Vertex>> folds;
};

// Color classes of a proper coloring in which every two classes are joined
// by at least one edge.
struct CompleteColoring {
    std::vector<VertexList> classes;
};

bool is_complete_coloring(const Graph& g, const CompleteColoring& c);

// Identifies y into x; both must be at distance exactly two. Vertices above
// y shift down by one. Throws GraphError otherwise.
Graph apply_fold(const Graph& g, Vertex x, Vertex y);

// Legal step by step, and the final graph is isomorphic to target.
bool verify_fold_sequence(const Graph& g, const FoldSequence& seq, const Graph& target);

struct FoldingNumber {
    int value;
    FoldSequence sequence;
};

// chi(G), with a fold sequence onto K_chi that collapses each color class
// of an optimal coloring. Throws NotThresholdError.
FoldingNumber threshold_folding_number(const Graph& g);

// Strips universal vertices (each adds one) and finishes with an exact
// achromatic search on what remains. Throws GraphError when G has no
// universal vertex and BudgetExceeded from the search.
int folding_number_universal(const Graph& g, const SearchBudget& budget);
int folding_number_universal(const Graph& g);

}  // namespace retract
