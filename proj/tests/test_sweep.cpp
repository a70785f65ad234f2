#include <doctest.h>

#include <stdexcept>

#include "retract/cograph_retract.hpp"
#include "retract/oracle.hpp"
#include "retract/sweep.hpp"

using namespace retract;

TEST_SUITE("sweep") {

TEST_CASE("parallel and serial maps agree") {
    auto kernel = [](std::size_t i) {
        const Graph g = random_cograph(2 + static_cast<int>(i % 6), i);
        const Graph h = random_cograph(1 + static_cast<int>(i % 4), i * 31 + 7);
        return std::make_pair(fpt_retract(g, h).yes(), brute_retract(g, h).yes());
    };
    const auto s = serial_map(300, kernel);
    for (int threads : {0, 1, 3}) {
        const auto p = parallel_map(300, kernel, threads);
        REQUIRE(p.size() == s.size());
        for (std::size_t i = 0; i < s.size(); ++i) {
            REQUIRE(p[i].ok());
            CHECK(*p[i].value == *s[i].value);
            CHECK(p[i].value->first == p[i].value->second);
        }
    }
}

TEST_CASE("exceptions stay with their item") {
    auto kernel = [](std::size_t i) -> int {
        if (i % 5 == 3) throw std::runtime_error("bad " + std::to_string(i));
        return static_cast<int>(i * i);
    };
    const auto p = parallel_map(20, kernel);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i % 5 == 3) {
            CHECK_FALSE(p[i].ok());
            CHECK(p[i].error == "bad " + std::to_string(i));
        } else {
            CHECK(*p[i].value == static_cast<int>(i * i));
        }
    }
    CHECK(serial_map(0, kernel).empty());
}

}
