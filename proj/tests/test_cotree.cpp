#include <doctest.h>

#include "fixtures.hpp"
#include "retract/canon.hpp"
#include "retract/enumerate.hpp"
#include "retract/oracle.hpp"

using namespace retract;

TEST_SUITE("cotree") {

TEST_CASE("P4 is rejected with an induced P4 witness") {
    const Graph p = fixtures::path(4);
    try {
        build_cotree(p);
        FAIL("P4 accepted");
    } catch (const NotCographError& e) {
        const auto& w = e.witness();
        REQUIRE(w.size() == 4);
        CHECK(p.adjacent(w[0], w[1]));
        CHECK(p.adjacent(w[1], w[2]));
        CHECK(p.adjacent(w[2], w[3]));
        CHECK_FALSE(p.adjacent(w[0], w[2]));
        CHECK_FALSE(p.adjacent(w[0], w[3]));
        CHECK_FALSE(p.adjacent(w[1], w[3]));
    }
}

TEST_CASE("witnesses are induced P4s on random non-cographs") {
    int seen = 0;
    for (std::uint64_t s = 0; s < 300; ++s) {
        const Graph g = random_graph(9, 35, s);
        const auto r = recognize_cograph(g);
        if (r.cotree) continue;
        ++seen;
        const auto& w = r.p4;
        REQUIRE(w.size() == 4);
        CHECK(induced_subgraph(g, w).graph == fixtures::path(4));
    }
    CHECK(seen > 100);
}

TEST_CASE("round trip and normal form") {
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : all_cographs(n)) {
            const Cotree t = build_cotree(g);
            std::string why;
            CHECK_MESSAGE(t.well_formed(&why), why);
            CHECK(cotree_to_graph(t) == g);
            CHECK(parse_cotree(to_string(t)).order() == n);
            CHECK(cotree_to_graph(parse_cotree(to_string(t))) == g);
            CHECK(cotree_to_graph(flip_kinds(t)) == complement(g));
        }
}

TEST_CASE("normalize flattens and collapses") {
    std::vector<Cotree> lone;
    lone.push_back(Cotree::leaf(2));
    std::vector<Cotree> parts;
    parts.push_back(parse_cotree("J(0,1)"));
    parts.push_back(Cotree::make(NodeKind::Union, std::move(lone)));
    parts.push_back(Cotree::leaf(3));
    const Cotree t = Cotree::make(NodeKind::Join, std::move(parts));
    CHECK_FALSE(t.well_formed());
    const Cotree n = normalize(t);
    CHECK(n.well_formed());
    CHECK(cotree_to_graph(n) == fixtures::k(4));
    CHECK(canonical_key(n) == "J(L,L,L,L)");
}

TEST_CASE("parse errors") {
    CHECK_THROWS(parse_cotree("J(0)"));
    CHECK_THROWS(parse_cotree("J(0,0)"));
    CHECK_THROWS(parse_cotree("X(0,1)"));
    CHECK_THROWS(parse_cotree("J(0,2)"));
    CHECK_THROWS(parse_cotree("J(0,1"));
}

TEST_CASE("clique number, coloring and maximum clique") {
    CHECK(clique_number(build_cotree(fixtures::butterfly())) == 3);
    CHECK(clique_number(build_cotree(fixtures::paw())) == 3);
    CHECK(chromatic_number(build_cotree(fixtures::c4())) == 2);
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : all_cographs(n)) {
            const Cotree t = build_cotree(g);
            const int w = clique_number(t);
            CHECK(w == brute_clique(g));
            const auto col = optimal_coloring(t, t.root());
            REQUIRE(col.size() == static_cast<std::size_t>(n));
            VertexList c(static_cast<std::size_t>(n));
            for (auto [v, k] : col) {
                CHECK(k < w);
                c[v] = k;
            }
            for (auto [u, v] : g.edges()) CHECK(c[u] != c[v]);
            const auto q = maximum_clique(t, t.root());
            CHECK(static_cast<int>(q.size()) == w);
            CHECK(induced_subgraph(g, q).graph == fixtures::k(w));
        }
}

TEST_CASE("canonical shape keys identify isomorphic cographs") {
    const auto gs = all_cographs(5);
    for (std::size_t i = 0; i < gs.size(); ++i)
        for (std::size_t j = 0; j < gs.size(); ++j)
            CHECK((canonical_key(build_cotree(gs[i])) == canonical_key(build_cotree(gs[j]))) == (i == j));
    const Graph g = fixtures::butterfly();
    const Graph moved = relabel(g, {4, 2, 0, 1, 3});
    CHECK(canonical_key(build_cotree(g)) == canonical_key(build_cotree(moved)));
    ShapeInterner in;
    const auto a = in.shapes(build_cotree(g));
    const auto b = in.shapes(build_cotree(moved));
    CHECK(a[build_cotree(g).root()] == b[build_cotree(moved).root()]);
}

TEST_CASE("classification") {
    CHECK(classify(fixtures::paw()).kind == GraphClassKind::Threshold);
    CHECK(classify(fixtures::butterfly()).kind == GraphClassKind::TriviallyPerfect);
    CHECK(classify(fixtures::c4()).kind == GraphClassKind::Cograph);
    CHECK(classify(fixtures::path(4)).kind == GraphClassKind::NotCograph);
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : all_graphs(n)) {
            const auto c = classify(g);
            switch (c.kind) {
            case GraphClassKind::NotCograph: CHECK(induced_subgraph(g, c.witness).graph == fixtures::path(4)); break;
            case GraphClassKind::Cograph: CHECK(isomorphic(induced_subgraph(g, c.witness).graph, fixtures::c4())); break;
            case GraphClassKind::TriviallyPerfect:
                CHECK(isomorphic(induced_subgraph(g, c.witness).graph, fixtures::two_k2()));
                break;
            case GraphClassKind::Threshold: CHECK(c.witness.empty()); break;
            }
        }
}

TEST_CASE("canonical codes") {
    for (int n = 1; n <= 5; ++n) {
        const auto gs = all_graphs(n);
        for (const Graph& g : gs) {
            VertexList perm = fixtures::iota(n);
            std::reverse(perm.begin(), perm.end());
            CHECK(canonical_code(relabel(g, perm)) == canonical_code(g));
        }
    }
    CHECK(all_graphs(5).size() == 34);
    CHECK(all_graphs(6).size() == 156);
    CHECK(all_cographs(6).size() == 66);
    CHECK(all_threshold(7).size() == 64);
    CHECK(all_trees(8).size() == 23);
}

}
