#include "retract/threshold.hpp"

namespace retract {

std::optional<EliminationOrder> threshold_elimination(const Graph& g) {
    const int n = g.order();
    std::vector<int> deg(static_cast<std::size_t>(n));
    std::vector<char> alive(static_cast<std::size_t>(n), 1);
    // Lazy buckets: an entry is stale once the vertex died or its degree moved.
    std::vector<VertexList> bucket(static_cast<std::size_t>(std::max(n, 1)));
    for (int v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        bucket[deg[v]].push_back(v);
    }
    auto take = [&](int d) -> Vertex {
        auto& b = bucket[static_cast<std::size_t>(d)];
        while (!b.empty()) {
            const Vertex v = b.back();
            b.pop_back();
            if (alive[v] && deg[v] == d) return v;
        }
        return -1;
    };
    EliminationOrder order;
    order.reserve(static_cast<std::size_t>(n));
    for (int remaining = n; remaining > 0; --remaining) {
        EliminationTag tag = EliminationTag::Isolated;
        Vertex v = take(0);
        if (v < 0 && remaining > 1) {
            v = take(remaining - 1);
            tag = EliminationTag::Universal;
        }
        if (v < 0) return std::nullopt;
        alive[v] = 0;
        order.push_back({v, tag});
        for (Vertex w : g.neighbors(v))
            if (alive[w]) bucket[--deg[w]].push_back(w);
    }
    return order;
}

bool verify_elimination(const Graph& g, const EliminationOrder& order) {
    const int n = g.order();
    if (static_cast<int>(order.size()) != n) return false;
    std::vector<char> alive(static_cast<std::size_t>(n), 1);
    std::vector<int> deg(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    int remaining = n;
    for (auto [v, tag] : order) {
        if (v < 0 || v >= n || !alive[v]) return false;
        const int want = tag == EliminationTag::Universal ? remaining - 1 : 0;
        if (deg[v] != want) return false;
        alive[v] = 0;
        --remaining;
        for (Vertex w : g.neighbors(v))
            if (alive[w]) --deg[w];
    }
    return true;
}

Graph threshold_from_tags(const std::vector<EliminationTag>& tags) {
    const int n = static_cast<int>(tags.size());
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        if (tags[i] == EliminationTag::Universal)
            for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph(n, e);
}

namespace {

struct Side {
    VertexList vertex;
    std::vector<EliminationTag> tag;
    std::vector<char> universal_from;  // any Universal tag at position >= i

    explicit Side(const EliminationOrder& order) {
        for (auto [v, t] : order) {
            vertex.push_back(v);
            tag.push_back(t);
        }
        universal_from.assign(order.size() + 1, 0);
        for (std::size_t i = order.size(); i-- > 0;)
            universal_from[i] = universal_from[i + 1] || tag[i] == EliminationTag::Universal;
    }

    int size() const { return static_cast<int>(vertex.size()); }

    // Length of the run of Isolated tags starting at i.
    int isolated_run(int i) const {
        int k = i;
        while (k < size() && tag[k] == EliminationTag::Isolated) ++k;
        return k - i;
    }
};

}  // namespace

RetractResult threshold_retract(const Graph& g, const Graph& h) {
    auto g_order = threshold_elimination(g);
    if (!g_order) throw NotThresholdError("G");
    auto h_order = threshold_elimination(h);
    if (!h_order) throw NotThresholdError("H");
    const Side gs(*g_order), hs(*h_order);

    RetractCertificate cert{VertexMap{VertexList(static_cast<std::size_t>(g.order()), -1)},
                            VertexMap{VertexList(static_cast<std::size_t>(h.order()), -1)}};
    auto pair_up = [&](Vertex x, Vertex y) {
        cert.rho.image[x] = y;
        cert.gamma.image[y] = x;
    };

    int i = 0, j = 0;
    while (true) {
        const int rem_g = gs.size() - i, rem_h = hs.size() - j;
        if (rem_h == 0) {
            if (rem_g == 0) break;
            return RetractResult::reject("H exhausted while G keeps an edge");
        }
        if (rem_g == 0) return RetractResult::reject("H has more vertices than G");
        if (rem_h == 1) {
            if (gs.universal_from[i]) return RetractResult::reject("single-vertex H but G has an edge");
            const Vertex y = hs.vertex[j];
            cert.gamma.image[y] = gs.vertex[i];
            for (int k = i; k < gs.size(); ++k) cert.rho.image[gs.vertex[k]] = y;
            break;
        }
        if (gs.tag[i] == EliminationTag::Universal) {
            if (hs.tag[j] != EliminationTag::Universal)
                return RetractResult::reject("G connected but H disconnected");
            pair_up(gs.vertex[i++], hs.vertex[j++]);
            continue;
        }
        const int a = gs.isolated_run(i);
        if (hs.tag[j] == EliminationTag::Isolated) {
            const int b = hs.isolated_run(j);
            if (b > a) return RetractResult::reject("H has more isolated vertices than G");
            for (int t = 0; t < a; ++t) {
                const Vertex x = gs.vertex[i + t];
                if (t < b)
                    pair_up(x, hs.vertex[j + t]);
                else
                    cert.rho.image[x] = hs.vertex[j + b - 1];
            }
            i += a;
            j += b;
            continue;
        }
        // G disconnected, H connected with at least two vertices.
        if (a == rem_g) return RetractResult::reject("G edgeless but H has an edge");
        const Vertex y1 = hs.vertex[j];
        for (int t = 0; t < a; ++t) cert.rho.image[gs.vertex[i + t]] = y1;
        pair_up(gs.vertex[i + a], y1);
        i += a + 1;
        ++j;
    }
    return RetractResult::accept(std::move(cert));
}

}  // namespace retract
