#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "retract/cotree.hpp"

namespace retract {

struct ThreePartitionInstance {
    int m = 0;
    int B = 0;
    std::vector<int> items;
};

// Empty when the instance has 3m positive items strictly between B/4 and
// B/2 summing to mB; otherwise one message per violation.
std::vector<std::string> validate(const ThreePartitionInstance& inst);

struct EncodedPair {
    Cotree g;
    Cotree h;
    int triples = 0;          // index triples i<j<k with a_i+a_j+a_k = B
    bool degenerate = false;  // no triple: G = 2K1, H = K2
};

// Throws std::invalid_argument on an invalid instance unless forced.
EncodedPair encode(const ThreePartitionInstance& inst, bool force = false);

using IndexTriple = std::array<int, 3>;
std::optional<std::vector<IndexTriple>> brute_3partition(const ThreePartitionInstance& inst);

// Line 1 "m B", line 2 the 3m items.
ThreePartitionInstance parse_instance(std::string_view text);
std::string format_instance(const ThreePartitionInstance& inst);

}  // namespace retract
