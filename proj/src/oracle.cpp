#include "retract/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <map>
#include <string>

#include "retract/canon.hpp"

namespace retract {

SearchBudget SearchBudget::with_env_override() const {
    SearchBudget b = *this;
    const char* env = std::getenv("RETRACT_ORACLE_BUDGET");
    if (!env || !*env) return b;
    const std::string s(env);
    try {
        if (auto colon = s.find(':'); colon != std::string::npos) {
            b.max_vertices = std::stoi(s.substr(0, colon));
            b.max_states = std::stoll(s.substr(colon + 1));
        } else {
            b.max_states = std::stoll(s);
        }
    } catch (const std::exception&) {
        throw std::invalid_argument("RETRACT_ORACLE_BUDGET must be 'states' or 'vertices:states'");
    }
    return b;
}

BudgetMeter::BudgetMeter(const SearchBudget& b) : budget_(b), start_(std::chrono::steady_clock::now()) {
    if (b.max_vertices <= 0 || b.max_states <= 0 || b.max_seconds < 0) throw std::invalid_argument("search budget caps must be positive");
}

void BudgetMeter::check_size(int vertices, const char* what) const {
    if (vertices > budget_.max_vertices)
        throw BudgetExceeded(std::string(what) + " has " + std::to_string(vertices) + " vertices, budget allows " +
                             std::to_string(budget_.max_vertices));
}

void BudgetMeter::tick() {
    if (++states_ > budget_.max_states) throw BudgetExceeded("state budget exhausted");
    if (budget_.max_seconds > 0 && (states_ & 0xfff) == 0) {
        const std::chrono::duration<double> el = std::chrono::steady_clock::now() - start_;
        if (el.count() > budget_.max_seconds) throw BudgetExceeded("wall-clock budget exhausted");
    }
}

namespace {

using Mask = std::uint64_t;

bool bit(Mask m, int i) { return (m >> i) & 1U; }

// Extends a partial rho (-1 = unassigned) to a homomorphism G -> H.
class HomSearch {
public:
    HomSearch(const std::vector<Mask>& g, const std::vector<Mask>& h, BudgetMeter& meter)
        : g_(g), h_(h), meter_(meter) {}

    bool extend(VertexList& rho) {
        // Assigned vertices must already be consistent with each other.
        const int n = static_cast<int>(g_.size());
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rho[u] >= 0 && rho[v] >= 0 && bit(g_[u], v) && !bit(h_[rho[u]], rho[v])) return false;
        order_.clear();
        for (int v = 0; v < n; ++v)
            if (rho[v] < 0) order_.push_back(v);
        return step(rho, 0);
    }

private:
    bool step(VertexList& rho, std::size_t idx) {
        if (idx == order_.size()) return true;
        const int v = order_[idx];
        const int k = static_cast<int>(h_.size());
        for (int c = 0; c < k; ++c) {
            meter_.tick();
            bool ok = true;
            for (Mask nb = g_[v]; nb && ok; nb &= nb - 1) {
                const int u = std::countr_zero(nb);
                if (rho[u] >= 0 && !bit(h_[c], rho[u])) ok = false;
            }
            if (!ok) continue;
            rho[v] = c;
            if (step(rho, idx + 1)) return true;
            rho[v] = -1;
        }
        return false;
    }

    const std::vector<Mask>& g_;
    const std::vector<Mask>& h_;
    BudgetMeter& meter_;
    std::vector<int> order_;
};

}  // namespace

RetractResult brute_retract(const Graph& g, const Graph& h, const SearchBudget& budget) {
    BudgetMeter meter(budget);
    if (h.order() > g.order()) return RetractResult::reject("H has more vertices than G");
    meter.check_size(g.order(), "G");
    meter.check_size(h.order(), "H");
    const auto gm = adjacency_masks(g), hm = adjacency_masks(h);
    const int n = g.order(), k = h.order();
    VertexList gamma(static_cast<std::size_t>(k), -1);
    Mask used = 0;
    HomSearch hom(gm, hm, meter);
    std::optional<RetractCertificate> found;
    // Induced embeddings of H, vertex by vertex.
    auto embed = [&](auto&& self, int y) -> bool {
        if (y == k) {
            VertexList rho(static_cast<std::size_t>(n), -1);
            for (int t = 0; t < k; ++t) rho[gamma[t]] = t;
            if (!hom.extend(rho)) return false;
            found = RetractCertificate{VertexMap{rho}, VertexMap{gamma}};
            return true;
        }
        for (int x = 0; x < n; ++x) {
            if (bit(used, x)) continue;
            meter.tick();
            bool ok = true;
            for (int t = 0; t < y && ok; ++t) ok = bit(hm[y], t) == bit(gm[x], gamma[t]);
            if (!ok) continue;
            gamma[y] = x;
            used |= Mask{1} << x;
            if (self(self, y + 1)) return true;
            used &= ~(Mask{1} << x);
            gamma[y] = -1;
        }
        return false;
    };
    if (embed(embed, 0)) return RetractResult::accept(std::move(*found));
    return RetractResult::reject("exhaustive search found no retraction");
}

RetractResult brute_retract_fixing(const Graph& g, const VertexList& hset, const SearchBudget& budget) {
    BudgetMeter meter(budget);
    meter.check_size(g.order(), "G");
    const auto sub = induced_subgraph(g, hset);
    const auto gm = adjacency_masks(g), hm = adjacency_masks(sub.graph);
    VertexList rho(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < hset.size(); ++i) rho[hset[i]] = static_cast<int>(i);
    HomSearch hom(gm, hm, meter);
    if (!hom.extend(rho)) return RetractResult::reject("no retraction fixes the pattern");
    return RetractResult::accept({VertexMap{rho}, VertexMap{hset}});
}

std::optional<VertexMap> brute_hom(const Graph& g, const Graph& h, const SearchBudget& budget) {
    BudgetMeter meter(budget);
    meter.check_size(g.order(), "G");
    meter.check_size(h.order(), "H");
    if (h.order() == 0) {
        if (g.order() == 0) return VertexMap{};
        return std::nullopt;
    }
    const auto gm = adjacency_masks(g), hm = adjacency_masks(h);
    VertexList rho(static_cast<std::size_t>(g.order()), -1);
    HomSearch hom(gm, hm, meter);
    if (!hom.extend(rho)) return std::nullopt;
    return VertexMap{rho};
}

AchromaticResult brute_achromatic(const Graph& g, const SearchBudget& budget) {
    BudgetMeter meter(budget);
    meter.check_size(g.order(), "G");
    const int n = g.order();
    if (n == 0) return {0, {}};
    const auto gm = adjacency_masks(g);
    std::vector<Mask> cls;  // members of each color class
    std::vector<Mask> best;
    int best_k = 0;
    auto complete = [&]() {
        for (std::size_t a = 0; a < cls.size(); ++a) {
            Mask nb = 0;
            for (Mask m = cls[a]; m; m &= m - 1) nb |= gm[std::countr_zero(m)];
            for (std::size_t b = a + 1; b < cls.size(); ++b)
                if (!(nb & cls[b])) return false;
        }
        return true;
    };
    auto rec = [&](auto&& self, int v) -> void {
        meter.tick();
        if (static_cast<int>(cls.size()) + (n - v) <= best_k) return;
        if (v == n) {
            if (complete()) {
                best_k = static_cast<int>(cls.size());
                best = cls;
            }
            return;
        }
        for (std::size_t c = 0; c < cls.size(); ++c) {
            if (gm[v] & cls[c]) continue;
            cls[c] |= Mask{1} << v;
            self(self, v + 1);
            cls[c] &= ~(Mask{1} << v);
        }
        cls.push_back(Mask{1} << v);
        self(self, v + 1);
        cls.pop_back();
    };
    rec(rec, 0);
    AchromaticResult res{best_k, {}};
    for (Mask m : best) {
        VertexList c;
        for (; m; m &= m - 1) c.push_back(std::countr_zero(m));
        res.coloring.classes.push_back(std::move(c));
    }
    return res;
}

namespace {

struct FoldState {
    Graph graph;
    VertexList labels;  // current index -> original label
    int parent;
    std::pair<Vertex, Vertex> fold;
};

FoldingResult fold_component(const Graph& g, const VertexList& comp, BudgetMeter& meter) {
    auto sub = induced_subgraph(g, comp);
    std::vector<FoldState> states;
    std::map<CanonicalCode, int> seen;
    states.push_back({sub.graph, sub.to_parent, -1, {-1, -1}});
    seen.emplace(canonical_code(sub.graph), 0);
    int best = -1, best_value = 0;
    for (std::size_t i = 0; i < states.size(); ++i) {
        const Graph cur = states[i].graph;
        const VertexList labels = states[i].labels;
        const int n = cur.order();
        if (cur.size() == static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2) {
            if (n > best_value) {
                best_value = n;
                best = static_cast<int>(i);
            }
            continue;
        }
        const auto m = adjacency_masks(cur);
        for (int x = 0; x < n; ++x)
            for (int y = x + 1; y < n; ++y) {
                if (bit(m[x], y) || !(m[x] & m[y])) continue;
                meter.tick();
                Graph next = apply_fold(cur, x, y);
                auto code = canonical_code(next);
                if (seen.count(code)) continue;
                VertexList nl = labels;
                nl.erase(nl.begin() + y);
                seen.emplace(std::move(code), static_cast<int>(states.size()));
                states.push_back({std::move(next), std::move(nl), static_cast<int>(i), {labels[x], labels[y]}});
            }
    }
    FoldingResult res{best_value, {comp, {}}};
    for (int s = best; s > 0; s = states[s].parent) res.sequence.folds.push_back(states[s].fold);
    std::reverse(res.sequence.folds.begin(), res.sequence.folds.end());
    return res;
}

}  // namespace

FoldingResult brute_folding_number(const Graph& g, const SearchBudget& budget) {
    BudgetMeter meter(budget);
    meter.check_size(g.order(), "G");
    FoldingResult best{0, {}};
    for (const auto& comp : components(g)) {
        auto r = fold_component(g, comp, meter);
        if (r.value > best.value) best = std::move(r);
    }
    return best;
}

int brute_clique(const Graph& g) {
    const auto m = adjacency_masks(g);
    int best = 0;
    auto rec = [&](auto&& self, Mask cand, int size) -> void {
        if (!cand) {
            best = std::max(best, size);
            return;
        }
        if (size + std::popcount(cand) <= best) return;
        const int v = std::countr_zero(cand);
        self(self, cand & m[v], size + 1);
        self(self, cand & ~(Mask{1} << v), size);
    };
    const int n = g.order();
    rec(rec, n == 64 ? ~Mask{0} : (Mask{1} << n) - 1, 0);
    return best;
}

int brute_chromatic(const Graph& g) {
    const int n = g.order();
    if (n == 0) return 0;
    const auto m = adjacency_masks(g);
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    for (int k = 1; k <= n; ++k) {
        auto rec = [&](auto&& self, int v) -> bool {
            if (v == n) return true;
            for (int c = 0; c < k; ++c) {
                bool ok = true;
                for (Mask nb = m[v]; nb && ok; nb &= nb - 1) ok = color[std::countr_zero(nb)] != c;
                if (!ok) continue;
                color[v] = c;
                if (self(self, v + 1)) return true;
                color[v] = -1;
            }
            return false;
        };
        if (rec(rec, 0)) return k;
    }
    return n;
}

}  // namespace retract
