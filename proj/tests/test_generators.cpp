#include <doctest.h>

#include "oracles.hpp"
#include "plansat/generators.hpp"

using namespace plansat;

TEST_CASE("double wheel sizes and maximality") {
    SUBCASE("k=6: 8 vertices, 18 edges, 12 triangular faces") {
        auto dw = double_wheel(6);
        CHECK(dw.vertex_count() == 8);
        CHECK(dw.edge_count() == 18);
        CHECK(faces(dw).size() == 12);
        CHECK(is_maximal_plane(dw));
    }
    SUBCASE("k=4 is the octahedron") {
        CHECK(isomorphic(double_wheel(4).graph(), test::octahedron_graph()));
    }
    SUBCASE("k=3 is maximal planar on 5 vertices") {
        auto dw = double_wheel(3);
        CHECK(dw.vertex_count() == 5);
        CHECK(dw.edge_count() == 9);
        CHECK(is_maximal_plane(dw));
    }
    CHECK_THROWS_AS(double_wheel(2), Error);
}

TEST_CASE("kleetope arithmetic") {
    SUBCASE("octahedron: 14 vertices, deg-3 count 8 attains the bound") {
        auto k = kleetope(double_wheel(4));
        CHECK(k.vertex_count() == 14);
        CHECK(is_maximal_plane(k));
        auto p = degree_profile(k.graph());
        CHECK(p.n3 == 8);
        CHECK(3 * p.n3 == 2 * 14 - 4);
    }
    SUBCASE("K4: 8 vertices, 18 edges") {
        auto k = kleetope(stacked_triangulation(4, 0));
        CHECK(k.vertex_count() == 8);
        CHECK(k.edge_count() == 18);
    }
    SUBCASE("twice K4: 20 vertices") {
        auto k2 = kleetope(kleetope(stacked_triangulation(4, 0)));
        CHECK(k2.vertex_count() == 20);
        CHECK(is_maximal_plane(k2));
    }
    SUBCASE("kleetope vertex count equals faces of the input") {
        auto base = random_triangulation(9, 3);
        auto k = kleetope(base);
        CHECK(degree_profile(k.graph()).n3 ==
              static_cast<int>(faces(base).size()));
    }
    CHECK_THROWS_AS(kleetope(cycle_embedding(5)), Error);
}

TEST_CASE("stacked and random triangulations") {
    SUBCASE("stacked(4) is K4") {
        CHECK(isomorphic(stacked_triangulation(4, 7).graph(), test::k4_graph()));
    }
    SUBCASE("stacked(5) is the unique 5-vertex triangulation") {
        CHECK(isomorphic(stacked_triangulation(5, 1).graph(), test::k5_minus_edge_graph()));
    }
    SUBCASE("random triangulations are maximal plane, deterministic per seed") {
        for (std::uint64_t seed = 0; seed < 6; ++seed) {
            auto a = random_triangulation(12, seed);
            CHECK(is_maximal_plane(a));
            CHECK(a.edge_count() == 3 * 12 - 6);
            auto b = random_triangulation(12, seed);
            CHECK(a == b);
        }
    }
    CHECK_THROWS_AS(stacked_triangulation(3, 0), Error);
}

TEST_CASE("triangulation catalog matches the known class counts") {
    CHECK(catalog_triangulations(4).size() == 1);
    CHECK(catalog_triangulations(5).size() == 1);
    CHECK(catalog_triangulations(6).size() == 2);
    CHECK(catalog_triangulations(7).size() == 5);
    CHECK_THROWS_AS(catalog_triangulations(9), Error);
    SUBCASE("catalog members are pairwise non-isomorphic triangulations") {
        auto cat = catalog_triangulations(7);
        for (std::size_t i = 0; i < cat.size(); ++i) {
            CHECK(is_maximal_plane(cat[i]));
            for (std::size_t j = i + 1; j < cat.size(); ++j)
                CHECK(!isomorphic(cat[i].graph(), cat[j].graph()));
        }
    }
    SUBCASE("closed under flips") {
        auto cat = catalog_triangulations(6);
        for (const auto& t : cat)
            for (auto [u, v] : t.graph().edges()) {
                try {
                    auto f = flip(t, u, v);
                    bool known = false;
                    for (const auto& c : cat)
                        if (isomorphic(f.graph(), c.graph())) known = true;
                    CHECK(known);
                } catch (const Error&) {
                }
            }
    }
}

TEST_CASE("G_k construction") {
    GkVertices des{};
    auto gk = build_Gk(12, &des);
    CHECK(gk.vertex_count() == 41);
    CHECK(gk.edge_count() == 117);
    CHECK(is_maximal_plane(gk));
    auto p = degree_profile(gk.graph());
    SUBCASE("hub degrees 2k, all else at most 10") {
        CHECK(p.degrees[des.v1] == 24);
        CHECK(p.degrees[des.v2] == 24);
        int big = 0;
        for (int d : p.degrees)
            if (d >= 11) ++big;
        CHECK(big == 2);
    }
    SUBCASE("designated vertex degrees") {
        CHECK(p.degrees[des.u] == 6);
        CHECK(p.degrees[des.a] == 10);
        CHECK(p.degrees[des.b] == 9);
        CHECK(p.degrees[des.x] == 4);
        CHECK(p.degrees[des.y] == 3);
        CHECK(p.degrees[des.z] == 5);
    }
    SUBCASE("u is adjacent to v2, a, b, x, y, z") {
        for (int w : {des.v2, des.a, des.b, des.x, des.y, des.z})
            CHECK(gk.graph().has_edge(des.u, w));
    }
    CHECK_THROWS_AS(build_Gk(5), Error);
}

TEST_CASE("H_k construction") {
    SUBCASE("k=12 sizes") {
        auto hk = build_Hk(12);
        CHECK(hk.vertex_count() == 41);
        CHECK(hk.edge_count() == 41);  // k + 29
        CHECK(faces(hk).size() == 5);
    }
    SUBCASE("k=13: 2k-23 = 3 isolated vertices") {
        auto hk = build_Hk(13);
        CHECK(hk.edge_count() == 13 + 29);
        int isolated = 0;
        for (int v = 0; v < hk.vertex_count(); ++v)
            if (hk.graph().degree(v) == 0) ++isolated;
        CHECK(isolated == 3);
    }
    SUBCASE("H_k embeds into G_k") {
        auto hk = build_Hk(12);
        auto gk = build_Gk(12);
        auto m = monomorphism_search(hk.graph(), gk.graph());
        REQUIRE(m.has_value());
        CHECK(m->verify(hk.graph(), gk.graph()));
    }
    CHECK_THROWS_AS(build_Hk(11), Error);
}

TEST_CASE("generated maximal plane embeddings satisfy e = 3v - 6") {
    for (const PlaneEmbedding& e :
         {double_wheel(7), kleetope(double_wheel(3)), random_triangulation(10, 2),
          build_Gk(7)}) {
        CHECK(e.edge_count() == 3 * e.vertex_count() - 6);
        CHECK(is_maximal_plane(e));
    }
}
