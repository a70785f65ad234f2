#pragma once

#include <utility>
#include <vector>

namespace retract {

struct BipartiteInstance {
    int left = 0;
    int right = 0;
    std::vector<std::pair<int, int>> edges;  // (left, right)
};

struct Matching {
    std::vector<std::pair<int, int>> pairs;  // sorted by left endpoint

    std::size_t size() const { return pairs.size(); }
};

// Hopcroft-Karp, O(E sqrt(V)). Vertices and adjacency are scanned in
// ascending index order, so the result is deterministic.
Matching max_matching(const BipartiteInstance& inst);

bool saturates_right(const Matching& m, int right);

// Partner of each right vertex (-1 when unmatched).
std::vector<int> right_partners(const Matching& m, int right);

}  // namespace retract
