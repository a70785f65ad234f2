#include <doctest.h>

#include "fixtures.hpp"
#include "retract/cograph_retract.hpp"
#include "retract/enumerate.hpp"
#include "retract/oracle.hpp"
#include "retract/rng.hpp"

using namespace retract;

TEST_SUITE("retract_cograph") {

TEST_CASE("homomorphism test follows chi(G) <= omega(H)") {
    CHECK(hom_exists(fixtures::c4(), fixtures::k(2)));
    CHECK_FALSE(hom_exists(fixtures::k(3), fixtures::k(2)));
    CHECK(hom_exists(Graph(3), Graph(1)));
    CHECK_THROWS_AS(hom_exists(fixtures::path(4), fixtures::k(2)), NotCographError);
    for (const Graph& g : up_to(5, all_cographs))
        for (const Graph& h : up_to(4, all_cographs)) {
            const auto m = hom_exists(g, h);
            CHECK(m.has_value() == brute_hom(g, h).has_value());
            if (m) CHECK(is_homomorphism(g, h, *m));
        }
}

TEST_CASE("partitioned solver") {
    const Graph b = fixtures::butterfly();
    const auto paw = partitioned_retract({b, {0, 1, 2, 3}});
    CHECK_FALSE(paw.yes());
    const auto tri = partitioned_retract({b, {0, 1, 2}});
    REQUIRE(tri.yes());
    CHECK(verify_retract_certificate(b, fixtures::k(3), *tri.certificate));
    CHECK(partitioned_prune_step({b, {0, 1, 2}}) == VertexList{3, 4});
    CHECK(partitioned_prune_step({b, {0, 1, 2, 3}}).empty());
}

TEST_CASE("partitioned solver agrees with the restricted oracle") {
    Rng rng(5);
    for (int it = 0; it < 500; ++it) {
        const int n = rng.range(1, 7);
        const Graph g = random_cograph(n, rng.next());
        VertexList hset;
        for (int v = 0; v < n; ++v)
            if (rng.chance(50)) hset.push_back(v);
        if (hset.empty()) hset.push_back(rng.range(0, n - 1));
        const auto r = partitioned_retract({g, hset});
        CHECK(r.yes() == brute_retract_fixing(g, hset).yes());
        if (r.yes()) {
            CHECK(verify_retract_certificate(g, induced_subgraph(g, hset).graph, *r.certificate));
            CHECK(r.certificate->gamma.image == hset);
        }
    }
}

TEST_CASE("fpt solver") {
    CHECK(fpt_retract(fixtures::butterfly(), fixtures::k(3)).yes());
    CHECK_FALSE(fpt_retract(fixtures::butterfly(), fixtures::paw()).yes());
    CHECK(fpt_retract(fixtures::c4(), fixtures::k(2)).yes());
    CHECK_FALSE(fpt_retract(fixtures::c4(), fixtures::two_k2()).yes());
    for (const Graph& g : up_to(6, all_cographs))
        for (const Graph& h : up_to(4, all_cographs)) {
            const auto r = fpt_retract(g, h);
            CHECK(r.yes() == brute_retract(g, h).yes());
            if (r.yes()) CHECK(verify_retract_certificate(g, h, *r.certificate));
        }
}

TEST_CASE("dispatcher routes by class") {
    CHECK(retract::retract(fixtures::paw(), fixtures::k(3)).route == Route::Threshold);
    CHECK(retract::retract(fixtures::butterfly(), fixtures::k(3)).route == Route::TriviallyPerfect);
    CHECK(retract::retract(fixtures::c4(), fixtures::k(2)).route == Route::Fpt);
    CHECK(route_name(Route::TriviallyPerfect) == "tp");
    CHECK_THROWS_AS(retract::retract(fixtures::path(4), fixtures::k(2)), NotCographError);
}

TEST_CASE("certificates survive relabeling") {
    Rng rng(9);
    for (int it = 0; it < 200; ++it) {
        const Graph g = random_cograph(rng.range(2, 12), rng.next());
        const Graph h = random_cograph(rng.range(1, 5), rng.next());
        const auto r = retract::retract(g, h).result;
        if (r.yes()) CHECK(verify_retract_certificate(g, h, *r.certificate));
    }
}

}
