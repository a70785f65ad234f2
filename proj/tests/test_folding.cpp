#include <doctest.h>

#include "fixtures.hpp"
#include "retract/canon.hpp"
#include "retract/enumerate.hpp"
#include "retract/folding.hpp"
#include "retract/oracle.hpp"
#include "retract/threshold.hpp"

using namespace retract;

TEST_SUITE("folding") {

TEST_CASE("simple folds") {
    CHECK(apply_fold(fixtures::path(3), 0, 2) == fixtures::k(2));
    CHECK(isomorphic(apply_fold(fixtures::from_cotree("J(U(0,1),U(2,3))"), 0, 1), fixtures::path(3)));
    CHECK_THROWS_AS(apply_fold(fixtures::path(3), 0, 1), GraphError);
    CHECK_THROWS_AS(apply_fold(fixtures::path(3), 1, 1), GraphError);
    CHECK_THROWS_AS(apply_fold(fixtures::path(4), 0, 3), GraphError);
    CHECK_THROWS_AS(apply_fold(Graph(2), 0, 1), GraphError);
}

TEST_CASE("fold sequences") {
    CHECK(verify_fold_sequence(fixtures::path(3), {{}, {{0, 2}}}, fixtures::k(2)));
    CHECK(verify_fold_sequence(fixtures::k(3), {}, fixtures::k(3)));
    CHECK_FALSE(verify_fold_sequence(fixtures::path(3), {{}, {{0, 1}}}, fixtures::k(2)));
    CHECK_FALSE(verify_fold_sequence(fixtures::path(3), {}, fixtures::k(2)));
    const Graph two = disjoint_union(fixtures::path(3), fixtures::k(1));
    CHECK(verify_fold_sequence(two, {{0, 1, 2}, {{0, 2}}}, fixtures::k(2)));
    CHECK_FALSE(verify_fold_sequence(two, {{0, 1}, {}}, fixtures::k(2)));
}

TEST_CASE("threshold graphs") {
    const auto paw = threshold_folding_number(fixtures::paw());
    CHECK(paw.value == 3);
    CHECK(verify_fold_sequence(fixtures::paw(), paw.sequence, fixtures::k(3)));
    CHECK(threshold_folding_number(Graph(1)).value == 1);
    CHECK_THROWS_AS(threshold_folding_number(fixtures::butterfly()), NotThresholdError);
    for (const Graph& g : up_to(6, all_threshold)) {
        const auto f = threshold_folding_number(g);
        CHECK(f.value == brute_chromatic(g));
        CHECK(verify_fold_sequence(g, f.sequence, fixtures::k(f.value)));
    }
}

TEST_CASE("universal vertex formula") {
    CHECK(folding_number_universal(fixtures::butterfly()) == 3);
    for (int n = 1; n <= 7; ++n) CHECK(folding_number_universal(fixtures::k(n)) == n);
    CHECK_THROWS_AS(folding_number_universal(fixtures::c4()), GraphError);
    for (const Graph& g : up_to(6, all_with_universal)) CHECK(folding_number_universal(g) == brute_folding_number(g).value);
}

TEST_CASE("oracle sequences verify") {
    for (const Graph& g : up_to(6, all_graphs)) {
        const auto f = brute_folding_number(g);
        CHECK(verify_fold_sequence(g, f.sequence, fixtures::k(f.value)));
    }
}

TEST_CASE("folds of trees stay trees") {
    for (const Graph& t : up_to(7, all_trees)) {
        CHECK(brute_folding_number(t).value <= 2);
        const auto m = adjacency_masks(t);
        for (int x = 0; x < t.order(); ++x)
            for (int y = x + 1; y < t.order(); ++y)
                if (!t.adjacent(x, y) && (m[x] & m[y])) {
                    const Graph f = apply_fold(t, x, y);
                    CHECK(is_connected(f));
                    CHECK(f.size() + 1 == static_cast<std::size_t>(f.order()));
                }
    }
}

}
