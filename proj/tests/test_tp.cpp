#include <doctest.h>

#include "fixtures.hpp"
#include "retract/enumerate.hpp"
#include "retract/oracle.hpp"
#include "retract/trivially_perfect.hpp"

using namespace retract;

TEST_SUITE("retract_tp") {

TEST_CASE("butterfly and paw") {
    const auto yes = tp_retract(fixtures::butterfly(), fixtures::k(3));
    REQUIRE(yes.yes());
    CHECK(verify_retract_certificate(fixtures::butterfly(), fixtures::k(3), *yes.certificate));
    const auto no = tp_retract(fixtures::butterfly(), fixtures::paw());
    CHECK_FALSE(no.yes());
    CHECK(no.reason == "matching-deficit");
}

TEST_CASE("rejection reasons") {
    CHECK(tp_retract(fixtures::k(2), fixtures::k(3)).reason == "clique-mismatch");
    CHECK(tp_retract(fixtures::from_cotree("J(0,U(1,2))"), fixtures::from_cotree("J(0,1,U(2,3))")).reason ==
          "clique-mismatch");
    CHECK(tp_retract(fixtures::from_cotree("J(0,1,U(J(2,3),J(4,5)))"), fixtures::from_cotree("J(0,U(J(1,2,3),4))")).reason ==
          "universal-count");
    CHECK(tp_retract(fixtures::butterfly(), fixtures::from_cotree("J(0,1,U(2,3))")).reason == "matching-deficit");
}

TEST_CASE("class errors") {
    CHECK(is_trivially_perfect(build_cotree(fixtures::butterfly())));
    CHECK_FALSE(is_trivially_perfect(build_cotree(fixtures::c4())));
    CHECK_THROWS_AS(tp_retract(fixtures::c4(), fixtures::k(2)), NotTriviallyPerfectError);
    CHECK_THROWS_AS(tp_retract(fixtures::path(4), fixtures::k(2)), NotTriviallyPerfectError);
}

TEST_CASE("agrees with the oracle on small graphs") {
    const auto gs = up_to(6, all_trivially_perfect);
    const auto hs = up_to(4, all_trivially_perfect);
    for (const Graph& g : gs)
        for (const Graph& h : hs) {
            const auto r = tp_retract(g, h);
            CHECK(r.yes() == brute_retract(g, h).yes());
            if (r.yes()) CHECK(verify_retract_certificate(g, h, *r.certificate));
        }
}

}
