#include <doctest.h>

#include "oracles.hpp"
#include "plansat/generators.hpp"
#include "plansat/solver.hpp"

using namespace plansat;

TEST_CASE("exact solver on K4") {
    auto r = exact_sat(test::k4_graph());
    auto naive = exact_sat_naive(test::k4_graph());
    CHECK(r.exhaustive);
    CHECK(r.sat_value == naive.sat_value);
    REQUIRE(r.witness.has_value());
    CHECK(is_plane_saturated(*r.witness, test::k4_graph()).saturated);
    CHECK(r.witness->edge_count() == r.sat_value);
}

TEST_CASE("exact solver agrees with the naive oracle on n = 5") {
    auto host = stacked_triangulation(5, 0).graph();
    auto fast = exact_sat(host);
    auto naive = exact_sat_naive(host);
    CHECK(fast.sat_value == naive.sat_value);
    CHECK(fast.exhaustive);
    CHECK(naive.exhaustive);
    REQUIRE(fast.witness.has_value());
    CHECK(is_plane_saturated(*fast.witness, host).saturated);
    CHECK(6 * fast.sat_value >= 5 + 4);
    CHECK(16 * fast.sat_value > 3 * 5 - 6);
}

TEST_CASE("exact solver agrees with the naive oracle on both n = 6 classes") {
    for (const auto& t : catalog_triangulations(6)) {
        auto fast = exact_sat(t.graph());
        auto naive = exact_sat_naive(t.graph());
        CHECK(fast.sat_value == naive.sat_value);
        REQUIRE(fast.witness.has_value());
        REQUIRE(naive.witness.has_value());
        CHECK(is_plane_saturated(*fast.witness, t.graph()).saturated);
        CHECK(is_plane_saturated(*naive.witness, t.graph()).saturated);
        CHECK(6 * fast.sat_value >= 6 + 4);
        CHECK(16 * fast.sat_value > 3 * 6 - 6);
    }
}

TEST_CASE("solver value is bounded by greedy from the edgeless embedding") {
    auto host = double_wheel(4);
    auto exact = exact_sat(host.graph());
    auto [greedy, trace] = greedy_saturate(edgeless_embedding(6), host.graph());
    CHECK(exact.sat_value <= greedy.edge_count());
    SUBCASE("octahedron host is improvable from its own 12 edges") {
        CHECK(exact.sat_value < 12);
        CHECK(!verify_not_improvable(host.graph(), host));
    }
    SUBCASE("the witness is not improvable") {
        CHECK(verify_not_improvable(host.graph(), *exact.witness));
    }
}

TEST_CASE("solver guards") {
    CHECK_THROWS_AS(exact_sat(random_triangulation(20, 0).graph()), Error);
    CHECK_THROWS_AS(exact_sat_naive(random_triangulation(7, 0).graph()), Error);
    CHECK_THROWS_AS(exact_sat(test::k5_graph()), Error);
}
