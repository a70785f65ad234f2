#include <doctest.h>

#include "fixtures.hpp"
#include "retract/canon.hpp"
#include "retract/certificate.hpp"
#include "retract/cograph_retract.hpp"
#include "retract/graph_io.hpp"
#include "retract/matching.hpp"
#include "retract/reduction.hpp"
#include "retract/trivially_perfect.hpp"

using namespace retract;

TEST_SUITE("graph_core") {

TEST_CASE("named inputs") {
    CHECK(parse_edge_list("4\n0 1\n1 2\n2 3") == fixtures::path(4));
    CHECK(parse_edge_list("1") == Graph(1));
    CHECK(parse_edge_list("3\n0 1\n1 0\n1 2") == fixtures::path(3));
    CHECK(parse_graph6("C~") == fixtures::k(4));
    CHECK(format_graph6(Graph(1)) == "@");
}

TEST_CASE("named operations") {
    CHECK(complement(fixtures::k(3)) == Graph(3));
    CHECK(isomorphic(complement(fixtures::path(4)), fixtures::path(4)));
    CHECK(isomorphic(complement(fixtures::c4()), fixtures::two_k2()));
    CHECK(components(fixtures::k(4)).size() == 1);
    CHECK(components(Graph(3)).size() == 3);
    CHECK(induced_subgraph(fixtures::butterfly(), VertexList{0, 1, 2}).graph == fixtures::k(3));
    CHECK(induced_subgraph(fixtures::path(4), VertexList{0, 3}).graph == Graph(2));
    const Graph b = fixtures::butterfly();
    CHECK(induced_subgraph(b, fixtures::iota(5)).graph == b);
    CHECK(universal_vertices(b) == VertexList{0});
    CHECK(universal_vertices(fixtures::k(3)) == VertexList{0, 1, 2});
    CHECK(universal_vertices(fixtures::two_k2()).empty());
    CHECK(random_cograph(1, 3) == Graph(1));
    CHECK(random_cograph(9, 42) == random_cograph(9, 42));
}

TEST_CASE("named maps and certificates") {
    CHECK(is_homomorphism(fixtures::paw(), fixtures::paw(), VertexMap::identity(4)));
    CHECK_FALSE(is_homomorphism(fixtures::k(2), Graph(1), VertexMap::constant(2, 0)));
    const Graph c4 = fixtures::c4();  // parts {0,1} and {2,3}
    const VertexMap two{{0, 0, 1, 1}};
    CHECK(is_homomorphism(c4, fixtures::k(2), two));
    CHECK(verify_retract_certificate(c4, fixtures::k(2), {two, VertexMap{{0, 2}}}));
    CHECK(verify_retract_certificate(c4, c4, RetractCertificate::identity(4)));
    CHECK_FALSE(verify_retract_certificate(fixtures::k(2), Graph(1), {VertexMap::constant(2, 0), VertexMap{{0}}}));
    const auto id = RetractCertificate::identity(4);
    CHECK(compose_certificates(id, id) == id);
}

}

TEST_SUITE("cotree") {

TEST_CASE("named trees") {
    const Cotree k1 = build_cotree(Graph(1));
    CHECK(k1.node(k1.root()).kind == NodeKind::Leaf);
    CHECK(canonical_key(build_cotree(fixtures::butterfly())) == canonical_key(parse_cotree("J(0,U(J(1,2),J(3,4)))")));
    CHECK(cotree_to_graph(parse_cotree("J(0,1)")) == fixtures::k(2));
    CHECK(cotree_to_graph(parse_cotree("U(0,1)")) == Graph(2));
    const Graph gadget = cotree_to_graph(parse_cotree("U(0,J(1,2))"));
    CHECK(gadget.size() == 1);
    CHECK(isolated_vertices(gadget) == VertexList{0});
    CHECK(canonical_key(normalize(parse_cotree("J(J(0,1),2)"))) == "J(L,L,L)");
}

}

TEST_SUITE("matching") {

TEST_CASE("named bipartite instances") {
    BipartiteInstance full{3, 3, {}};
    for (int l = 0; l < 3; ++l)
        for (int r = 0; r < 3; ++r) full.edges.emplace_back(l, r);
    const auto m = max_matching(full);
    CHECK(m.size() == 3);
    CHECK(saturates_right(m, 3));
    CHECK(max_matching({2, 1, {{0, 0}, {1, 0}}}).size() == 1);
    CHECK_FALSE(saturates_right(Matching{}, 1));
    CHECK_FALSE(saturates_right(max_matching({2, 2, {{0, 0}, {1, 0}}}), 2));
}

}

TEST_SUITE("retract_tp") {

TEST_CASE("butterfly onto itself") {
    const auto r = tp_retract(fixtures::butterfly(), fixtures::butterfly());
    REQUIRE(r.yes());
    CHECK(verify_retract_certificate(fixtures::butterfly(), fixtures::butterfly(), *r.certificate));
}

}

TEST_SUITE("retract_cograph") {

TEST_CASE("named cograph instances") {
    CHECK(hom_exists(Graph(1), fixtures::butterfly()));
    CHECK(partitioned_retract({fixtures::butterfly(), fixtures::iota(5)}).yes());
    const auto same = fpt_retract(fixtures::c4(), fixtures::c4());
    REQUIRE(same.yes());
    CHECK(verify_retract_certificate(fixtures::c4(), fixtures::c4(), *same.certificate));
    const auto no = encode({2, 16, {5, 5, 5, 5, 5, 7}});
    CHECK_FALSE(fpt_retract(no.g, no.h).yes());
    const auto d = retract::retract(fixtures::butterfly(), fixtures::paw());
    CHECK(d.route == Route::TriviallyPerfect);
    CHECK_FALSE(d.result.yes());
    // connected G never retracts onto disconnected H
    CHECK_FALSE(fpt_retract(fixtures::c4(), fixtures::two_k2()).yes());
    CHECK_FALSE(fpt_retract(fixtures::from_cotree("J(U(0,1),U(2,3),4)"), fixtures::from_cotree("U(J(0,1,2),3)")).yes());
    // disconnected G, connected H: one component carries H, the rest map in
    const Graph g = disjoint_union(fixtures::c4(), fixtures::k(2));
    const auto r = fpt_retract(g, fixtures::k(2));
    REQUIRE(r.yes());
    CHECK(verify_retract_certificate(g, fixtures::k(2), *r.certificate));
    CHECK_FALSE(fpt_retract(disjoint_union(fixtures::c4(), fixtures::k(3)), fixtures::c4()).yes());
}

}
