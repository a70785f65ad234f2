#include <doctest.h>

#include <algorithm>
#include <functional>

#include "retract/matching.hpp"
#include "retract/rng.hpp"

using namespace retract;

namespace {

std::size_t brute_matching(const BipartiteInstance& b) {
    std::size_t best = 0;
    std::vector<char> used(static_cast<std::size_t>(b.right), 0);
    std::function<void(int, std::size_t)> go = [&](int l, std::size_t size) {
        if (l == b.left) {
            best = std::max(best, size);
            return;
        }
        go(l + 1, size);
        for (auto [x, y] : b.edges)
            if (x == l && !used[y]) {
                used[y] = 1;
                go(l + 1, size + 1);
                used[y] = 0;
            }
    };
    go(0, 0);
    return best;
}

}  // namespace

TEST_SUITE("matching") {

TEST_CASE("small cases") {
    CHECK(max_matching({2, 2, {{0, 0}, {0, 1}, {1, 1}}}).size() == 2);
    CHECK(max_matching({3, 1, {{0, 0}, {1, 0}, {2, 0}}}).size() == 1);
    CHECK(max_matching({0, 0, {}}).size() == 0);
    const auto m = max_matching({2, 2, {{0, 0}, {1, 0}, {1, 1}}});
    CHECK(saturates_right(m, 2));
    CHECK(right_partners(m, 2) == std::vector<int>{0, 1});
}

TEST_CASE("agrees with exhaustive search") {
    Rng rng(11);
    for (int it = 0; it < 400; ++it) {
        BipartiteInstance b{rng.range(0, 6), rng.range(0, 6), {}};
        for (int l = 0; l < b.left; ++l)
            for (int r = 0; r < b.right; ++r)
                if (rng.chance(35)) b.edges.emplace_back(l, r);
        const auto m = max_matching(b);
        CHECK(m.size() == brute_matching(b));
        std::vector<char> seen(static_cast<std::size_t>(b.right), 0);
        for (auto [l, r] : m.pairs) {
            CHECK(std::find(b.edges.begin(), b.edges.end(), std::make_pair(l, r)) != b.edges.end());
            CHECK_FALSE(seen[r]);
            seen[r] = 1;
        }
    }
}

}
