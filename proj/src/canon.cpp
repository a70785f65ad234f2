#include "retract/canon.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace retract {

namespace {

class Canonizer {
public:
    explicit Canonizer(const Graph& g) : g_(g), n_(g.order()) {}

    CanonicalCode run() {
        std::vector<int> colors(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v) colors[v] = g_.degree(v);
        refine(colors);
        search(colors);
        return best_ ? *best_ : CanonicalCode{n_, {}};
    }

private:
    // Equitable refinement; new colors are ranks of (old color, sorted
    // neighbor colors), so the ordering of existing cells is preserved.
    void refine(std::vector<int>& colors) const {
        std::size_t classes = 0;
        while (true) {
            std::vector<std::vector<int>> sig(static_cast<std::size_t>(n_));
            for (int v = 0; v < n_; ++v) {
                sig[v].push_back(colors[v]);
                std::vector<int> nb;
                for (Vertex w : g_.neighbors(v)) nb.push_back(colors[w]);
                std::sort(nb.begin(), nb.end());
                sig[v].insert(sig[v].end(), nb.begin(), nb.end());
            }
            std::map<std::vector<int>, int> rank;
            for (auto& s : sig) rank.emplace(s, 0);
            int r = 0;
            for (auto& [s, id] : rank) id = r++;
            for (int v = 0; v < n_; ++v) colors[v] = rank[sig[v]];
            if (rank.size() == classes) return;
            classes = rank.size();
        }
    }

    bool twins(Vertex a, Vertex b) const {
        const auto& na = g_.neighbors(a);
        const auto& nb = g_.neighbors(b);
        auto ia = na.begin(), ib = nb.begin();
        while (true) {
            while (ia != na.end() && *ia == b) ++ia;
            while (ib != nb.end() && *ib == a) ++ib;
            if (ia == na.end() || ib == nb.end()) return ia == na.end() && ib == nb.end();
            if (*ia != *ib) return false;
            ++ia;
            ++ib;
        }
    }

    CanonicalCode code_for(const std::vector<int>& colors) const {
        std::vector<Vertex> at(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v) at[colors[v]] = v;
        CanonicalCode c{n_, {}};
        const std::size_t total = static_cast<std::size_t>(n_) * static_cast<std::size_t>(std::max(n_ - 1, 0)) / 2;
        c.bits.assign((total + 63) / 64, 0);
        std::size_t k = 0;
        for (int j = 1; j < n_; ++j)
            for (int i = 0; i < j; ++i, ++k)
                if (g_.adjacent(at[i], at[j])) c.bits[k / 64] |= std::uint64_t{1} << (63 - k % 64);
        return c;
    }

    void search(const std::vector<int>& colors) {
        // First non-singleton cell by color.
        std::vector<int> size(static_cast<std::size_t>(n_), 0);
        for (int c : colors) ++size[c];
        int target = -1;
        for (int c = 0; c < n_; ++c)
            if (size[c] > 1) {
                target = c;
                break;
            }
        if (target < 0) {
            auto code = code_for(colors);
            if (!best_ || code < *best_) best_ = std::move(code);
            return;
        }
        std::vector<Vertex> tried;
        for (int v = 0; v < n_; ++v) {
            if (colors[v] != target) continue;
            if (std::any_of(tried.begin(), tried.end(), [&](Vertex w) { return twins(v, w); })) continue;
            tried.push_back(v);
            std::vector<int> next(colors);
            for (int w = 0; w < n_; ++w) next[w] = 2 * colors[w] + (colors[w] == target && w != v ? 1 : 0);
            refine(next);
            search(next);
        }
    }

    const Graph& g_;
    int n_;
    std::optional<CanonicalCode> best_;
};

}  // namespace

CanonicalCode canonical_code(const Graph& g) { return Canonizer(g).run(); }

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    return canonical_code(a) == canonical_code(b);
}

Graph relabel(const Graph& g, const VertexList& perm) {
    std::vector<Edge> e;
    for (auto [u, v] : g.edges()) e.emplace_back(perm[u], perm[v]);
    return Graph(g.order(), e);
}

}  // namespace retract
