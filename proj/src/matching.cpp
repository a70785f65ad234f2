#include "retract/matching.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

namespace retract {

namespace {

constexpr int kInf = std::numeric_limits<int>::max();

class HopcroftKarp {
public:
    explicit HopcroftKarp(const BipartiteInstance& inst)
        : adj_(static_cast<std::size_t>(inst.left)),
          match_l_(static_cast<std::size_t>(inst.left), -1),
          match_r_(static_cast<std::size_t>(inst.right), -1),
          dist_(static_cast<std::size_t>(inst.left)),
          next_(static_cast<std::size_t>(inst.left)) {
        for (auto [l, r] : inst.edges) {
            if (l < 0 || l >= inst.left || r < 0 || r >= inst.right)
                throw std::out_of_range("bipartite edge out of range");
            adj_[l].push_back(r);
        }
        for (auto& row : adj_) {
            std::sort(row.begin(), row.end());
            row.erase(std::unique(row.begin(), row.end()), row.end());
        }
    }

    Matching run() {
        while (layer())
            for (int l = 0; l < static_cast<int>(adj_.size()); ++l)
                if (match_l_[l] == -1) augment(l);
        Matching m;
        for (int l = 0; l < static_cast<int>(adj_.size()); ++l)
            if (match_l_[l] != -1) m.pairs.emplace_back(l, match_l_[l]);
        return m;
    }

private:
    bool layer() {
        std::queue<int> q;
        for (int l = 0; l < static_cast<int>(adj_.size()); ++l) {
            dist_[l] = match_l_[l] == -1 ? 0 : kInf;
            if (dist_[l] == 0) q.push(l);
            next_[l] = 0;
        }
        bool found = false;
        while (!q.empty()) {
            const int l = q.front();
            q.pop();
            for (int r : adj_[l]) {
                const int m = match_r_[r];
                if (m == -1) {
                    found = true;
                } else if (dist_[m] == kInf) {
                    dist_[m] = dist_[l] + 1;
                    q.push(m);
                }
            }
        }
        return found;
    }

    // Iterative DFS along the layered graph.
    bool augment(int start) {
        std::vector<int> path{start};
        while (!path.empty()) {
            const int l = path.back();
            auto& idx = next_[l];
            bool advanced = false;
            while (idx < adj_[l].size()) {
                const int r = adj_[l][idx];
                const int m = match_r_[r];
                if (m == -1) {
                    // Flip the alternating path ending at r.
                    int free_r = r;
                    for (auto it = path.rbegin(); it != path.rend(); ++it) {
                        const int left = *it;
                        const int prev = match_l_[left];
                        match_l_[left] = free_r;
                        match_r_[free_r] = left;
                        free_r = prev;
                    }
                    return true;
                }
                if (dist_[m] == dist_[l] + 1) {
                    path.push_back(m);
                    advanced = true;
                    break;
                }
                ++idx;
            }
            if (!advanced) {
                dist_[l] = kInf;
                path.pop_back();
                if (!path.empty()) ++next_[path.back()];
            }
        }
        return false;
    }

    std::vector<std::vector<int>> adj_;
    std::vector<int> match_l_, match_r_;
    std::vector<int> dist_;
    std::vector<std::size_t> next_;
};

}  // namespace

Matching max_matching(const BipartiteInstance& inst) { return HopcroftKarp(inst).run(); }

bool saturates_right(const Matching& m, int right) {
    std::vector<char> hit(static_cast<std::size_t>(std::max(right, 0)), 0);
    for (auto [l, r] : m.pairs)
        if (r >= 0 && r < right) hit[r] = 1;
    return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

std::vector<int> right_partners(const Matching& m, int right) {
    std::vector<int> out(static_cast<std::size_t>(right), -1);
    for (auto [l, r] : m.pairs) out[r] = l;
    return out;
}

}  // namespace retract
