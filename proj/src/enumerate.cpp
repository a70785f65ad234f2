#include "retract/enumerate.hpp"

#include <map>
#include <mutex>

#include "retract/canon.hpp"
#include "retract/cotree.hpp"
#include "retract/threshold.hpp"

namespace retract {

namespace {

class Unique {
public:
    void add(Graph g) {
        auto code = canonical_code(g);
        if (seen_.emplace(std::move(code), graphs_.size()).second) graphs_.push_back(std::move(g));
    }
    std::vector<Graph> take() { return std::move(graphs_); }

private:
    std::map<CanonicalCode, std::size_t> seen_;
    std::vector<Graph> graphs_;
};

std::map<int, std::vector<Graph>>& cograph_cache() {
    static std::map<int, std::vector<Graph>> cache;
    return cache;
}

}  // namespace

std::vector<Graph> all_graphs(int n) {
    if (n < 1) return {};
    std::vector<Edge> slots;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    Unique u;
    const std::uint64_t total = std::uint64_t{1} << slots.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        std::vector<Edge> e;
        for (std::size_t i = 0; i < slots.size(); ++i)
            if ((mask >> i) & 1U) e.push_back(slots[i]);
        u.add(Graph(n, e));
    }
    return u.take();
}

std::vector<Graph> all_cographs(int n) {
    if (n < 1) return {};
    static std::recursive_mutex mu;
    std::lock_guard lock(mu);
    auto& cache = cograph_cache();
    if (auto it = cache.find(n); it != cache.end()) return it->second;
    Unique u;
    if (n == 1) {
        u.add(Graph(1));
    } else {
        for (int k = 1; k <= n / 2; ++k) {
            const auto a = all_cographs(k), b = all_cographs(n - k);
            for (const auto& x : a)
                for (const auto& y : b) {
                    u.add(disjoint_union(x, y));
                    u.add(join(x, y));
                }
        }
    }
    return cache[n] = u.take();
}

std::vector<Graph> all_connected_cographs(int n) {
    std::vector<Graph> out;
    for (auto& g : all_cographs(n))
        if (is_connected(g)) out.push_back(std::move(g));
    return out;
}

std::vector<Graph> all_trivially_perfect(int n) {
    std::vector<Graph> out;
    for (auto& g : all_cographs(n)) {
        const auto k = classify(g).kind;
        if (k == GraphClassKind::Threshold || k == GraphClassKind::TriviallyPerfect) out.push_back(std::move(g));
    }
    return out;
}

std::vector<Graph> all_threshold(int n) {
    if (n < 1) return {};
    Unique u;
    // The last tag is irrelevant, so 2^(n-1) sequences cover every class.
    for (std::uint32_t mask = 0; mask < (1U << (n - 1)); ++mask) {
        std::vector<EliminationTag> tags(static_cast<std::size_t>(n), EliminationTag::Isolated);
        for (int i = 0; i + 1 < n; ++i)
            if ((mask >> i) & 1U) tags[i] = EliminationTag::Universal;
        u.add(threshold_from_tags(tags));
    }
    return u.take();
}

std::vector<Graph> all_trees(int n) {
    if (n < 1) return {};
    std::vector<Graph> level{Graph(1)};
    for (int k = 2; k <= n; ++k) {
        Unique u;
        for (const auto& t : level)
            for (int v = 0; v < t.order(); ++v) {
                auto e = t.edges();
                e.emplace_back(v, k - 1);
                u.add(Graph(k, e));
            }
        level = u.take();
    }
    return level;
}

std::vector<Graph> all_with_universal(int n) {
    if (n < 1) return {};
    if (n == 1) return {Graph(1)};
    Unique u;
    for (const auto& g : all_graphs(n - 1)) u.add(join(Graph(1), g));
    return u.take();
}

}  // namespace retract
