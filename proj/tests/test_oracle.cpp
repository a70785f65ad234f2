#include <doctest.h>

#include <cstdlib>

#include "fixtures.hpp"
#include "retract/enumerate.hpp"
#include "retract/oracle.hpp"

using namespace retract;
namespace naive = fixtures::naive;

TEST_SUITE("oracle") {

TEST_CASE("named values") {
    CHECK(brute_retract(fixtures::butterfly(), fixtures::k(3)).yes());
    CHECK_FALSE(brute_retract(fixtures::butterfly(), fixtures::paw()).yes());
    CHECK(brute_retract(fixtures::paw(), fixtures::paw()).yes());
    CHECK(brute_hom(fixtures::c4(), fixtures::k(2)));
    CHECK_FALSE(brute_hom(fixtures::k(3), fixtures::k(2)));
    CHECK(brute_hom(Graph(3), Graph(1)));
    CHECK(brute_achromatic(fixtures::two_k2()).value == 2);
    CHECK(brute_achromatic(fixtures::k(3)).value == 3);
    CHECK(brute_achromatic(Graph(1)).value == 1);
    CHECK(brute_folding_number(fixtures::path(4)).value == 2);
    CHECK(brute_folding_number(fixtures::k(3)).value == 3);
    CHECK(brute_folding_number(fixtures::butterfly()).value == 3);
    CHECK(brute_clique(fixtures::butterfly()) == 3);
    CHECK(brute_chromatic(fixtures::c4()) == 2);
    CHECK(brute_clique(Graph(1)) == 1);
}

TEST_CASE("agrees with plain enumeration") {
    const auto gs = up_to(5, all_graphs);
    const auto hs = up_to(3, all_graphs);
    for (const Graph& g : gs) {
        CHECK(brute_clique(g) == naive::clique(g));
        CHECK(brute_chromatic(g) == naive::chromatic(g));
        CHECK(brute_achromatic(g).value == naive::achromatic(g));
        for (const Graph& h : hs) {
            CHECK(brute_hom(g, h).has_value() == naive::hom(g, h));
            const auto r = brute_retract(g, h);
            CHECK(r.yes() == naive::retract(g, h));
            if (r.yes()) CHECK(verify_retract_certificate(g, h, *r.certificate));
        }
    }
}

TEST_CASE("retracts share clique and chromatic numbers") {
    for (const Graph& g : up_to(5, all_graphs))
        for (const Graph& h : up_to(4, all_graphs))
            if (brute_retract(g, h).yes()) {
                CHECK(brute_hom(g, h));
                CHECK(brute_clique(g) == brute_clique(h));
                CHECK(brute_chromatic(g) == brute_chromatic(h));
            }
}

TEST_CASE("achromatic witness is a complete coloring") {
    for (const Graph& g : up_to(6, all_graphs)) {
        const auto a = brute_achromatic(g);
        CHECK(is_complete_coloring(g, a.coloring));
        CHECK(static_cast<int>(a.coloring.classes.size()) == a.value);
        CHECK(a.value >= brute_chromatic(g));
    }
}

TEST_CASE("budgets fail loudly") {
    CHECK_THROWS_AS(brute_retract(fixtures::k(9), fixtures::k(3)), BudgetExceeded);
    CHECK_THROWS_AS(brute_retract(Graph(8), Graph(1), SearchBudget{8, 3, 0}), BudgetExceeded);
    CHECK_THROWS_AS(brute_achromatic(Graph(10)), BudgetExceeded);
    CHECK_THROWS_AS(BudgetMeter(SearchBudget{0, 1, 0}), std::invalid_argument);
    CHECK_FALSE(brute_retract(fixtures::k(3), fixtures::k(9)).yes());
}

TEST_CASE("budget environment override") {
    ::setenv("RETRACT_ORACLE_BUDGET", "12:500", 1);
    const auto b = SearchBudget::retract_default().with_env_override();
    CHECK(b.max_vertices == 12);
    CHECK(b.max_states == 500);
    ::setenv("RETRACT_ORACLE_BUDGET", "77", 1);
    CHECK(SearchBudget::retract_default().with_env_override().max_states == 77);
    ::setenv("RETRACT_ORACLE_BUDGET", "lots", 1);
    CHECK_THROWS_AS(SearchBudget::retract_default().with_env_override(), std::invalid_argument);
    ::unsetenv("RETRACT_ORACLE_BUDGET");
}

}
