#pragma once

#include <vector>

#include "retract/graph.hpp"

namespace retract {

// Pairwise non-isomorphic graphs of a given order. all_graphs is only
// practical up to n = 6.
std::vector<Graph> all_graphs(int n);
std::vector<Graph> all_cographs(int n);
std::vector<Graph> all_connected_cographs(int n);
std::vector<Graph> all_trivially_perfect(int n);
std::vector<Graph> all_threshold(int n);
std::vector<Graph> all_trees(int n);
// K1 joined with every graph of order n - 1.
std::vector<Graph> all_with_universal(int n);

// Same, for every order 1..n.
template <class F>
std::vector<Graph> up_to(int n, F family) {
    std::vector<Graph> out;
    for (int k = 1; k <= n; ++k)
        for (auto& g : family(k)) out.push_back(std::move(g));
    return out;
}

}  // namespace retract
