#include <doctest.h>

#include "oracles.hpp"
#include "plansat/embedding.hpp"
#include "plansat/generators.hpp"
#include "plansat/solver.hpp"

using namespace plansat;

namespace {

std::vector<std::pair<DirEdge, std::vector<int>>> face_signature(const PlaneEmbedding& e) {
    std::vector<std::pair<DirEdge, std::vector<int>>> sig;
    for (const auto& f : faces(e)) sig.emplace_back(f.id, f.incident_vertices);
    return sig;
}

}  // namespace

TEST_CASE("insert_edge: C4 plus a diagonal gives two triangles") {
    auto e = cycle_embedding(4);
    auto result = insert_edge(e, {0, 2, faces(e)[0].id});
    auto fs = faces(result);
    int triangles = 0, quads = 0;
    for (const auto& f : fs) {
        if (f.walks.size() == 1 && f.walks[0].size() == 3) ++triangles;
        if (f.walks.size() == 1 && f.walks[0].size() == 4) ++quads;
    }
    CHECK(triangles == 2);
    CHECK(quads == 1);
    CHECK(result.edge_count() == 5);
}

TEST_CASE("insert_edge: two isolated vertices become one doubled walk") {
    auto e = edgeless_embedding(2);
    auto result = insert_edge(e, {0, 1, kIsolatedRegionId});
    auto fs = faces(result);
    REQUIRE(fs.size() == 1);
    REQUIRE(fs[0].walks.size() == 1);
    CHECK(fs[0].walks[0].size() == 2);  // 0->1 and 1->0 on one walk
}

TEST_CASE("insert_edge: pair on different faces only is rejected") {
    // Octahedron minus nothing: all faces triangles; 0 and 5 adjacent, but
    // take two far apart vertices of a double wheel instead.
    auto dw = double_wheel(6);
    // hubs 6 and 7 never share a face
    CHECK_THROWS_AS(insert_edge(dw, {6, 7, faces(dw)[0].id}), Error);
    // and an already adjacent pair is rejected
    CHECK_THROWS_AS(insert_edge(dw, {0, 1, faces(dw)[0].id}), Error);
}

TEST_CASE("delete_edges spec cases") {
    auto k4 = stacked_triangulation(4, 0);
    SUBCASE("one edge of K4 leaves three faces") {
        auto d = delete_edges(k4, {{0, 1}});
        CHECK(faces(d).size() == 3);
    }
    SUBCASE("empty deletion is the identity") {
        auto d = delete_edges(k4, {});
        CHECK(d == k4);
    }
    SUBCASE("deleting all edges at a vertex isolates it in the surrounding face") {
        auto d = delete_edges(k4, {{0, 3}, {1, 3}, {2, 3}});
        auto fs = faces(d);
        REQUIRE(fs.size() == 2);
        // vertex 3 sat on the side opposite the face (0,1,2) of K4; the
        // original triangle face must survive empty.
        bool found_empty = false, found_holding = false;
        for (const auto& f : fs) {
            if (f.contents.empty()) found_empty = true;
            if (f.contents == std::vector<int>{3}) {
                found_holding = true;
                CHECK(f.incident_vertices == std::vector<int>{0, 1, 2, 3});
            }
        }
        CHECK(found_empty);
        CHECK(found_holding);
    }
    SUBCASE("unknown edge is rejected") {
        auto c4 = cycle_embedding(4);
        CHECK_THROWS_AS(delete_edges(c4, {{0, 2}}), Error);
    }
}

TEST_CASE("insert then delete restores the face structure") {
    SUBCASE("C4 diagonal round trip") {
        auto e = cycle_embedding(4);
        auto there = insert_edge(e, {0, 2, faces(e)[0].id});
        auto back = delete_edges(there, {{0, 2}});
        CHECK(face_signature(back) == face_signature(e));
        CHECK(back.rotations() == e.rotations());
    }
    SUBCASE("attach and detach an isolated vertex") {
        Graph g(4, {{0, 1}, {1, 2}, {0, 2}});
        std::map<int, Anchor> anchors{{0, Anchor::root()}, {3, Anchor::at(0, 1)}};
        auto e = PlaneEmbedding::create(g, {{1, 2}, {0, 2}, {0, 1}, {}}, anchors);
        auto fs = faces(e);
        DirEdge holding = kIsolatedRegionId;
        for (const auto& f : fs)
            if (!f.contents.empty()) holding = f.id;
        auto there = insert_edge(e, {1, 3, holding});
        auto back = delete_edges(there, {{1, 3}});
        CHECK(face_signature(back) == face_signature(e));
        CHECK(back == e);
    }
}

TEST_CASE("induced plane subgraph") {
    SUBCASE("keep everything is the identity") {
        auto oct = double_wheel(4);
        std::vector<int> all{0, 1, 2, 3, 4, 5};
        CHECK(induced_plane_subgraph(oct, all) == oct);
    }
    SUBCASE("neighbors of an icosahedron vertex induce C5") {
        auto emb = planar_embed(test::icosahedron_graph());
        REQUIRE(emb.has_value());
        auto nb = emb->graph().neighbors(0);
        auto sub = induced_plane_subgraph(*emb, nb);
        CHECK(sub.vertex_count() == 5);
        CHECK(sub.edge_count() == 5);
        for (int v = 0; v < 5; ++v) CHECK(sub.graph().degree(v) == 2);
        CHECK(faces(sub).size() == 2);
    }
    SUBCASE("original vertices of a kleetope induce the base triangulation") {
        auto oct = double_wheel(4);
        auto klee = kleetope(oct);
        std::vector<int> keep{0, 1, 2, 3, 4, 5};
        auto sub = induced_plane_subgraph(klee, keep);
        CHECK(is_maximal_plane(sub));
        CHECK(isomorphic(sub.graph(), oct.graph()));
    }
}

TEST_CASE("extend_to_triangulation") {
    SUBCASE("C4 becomes K4") {
        auto t = extend_to_triangulation(cycle_embedding(4));
        CHECK(is_maximal_plane(t));
        CHECK(t.vertex_count() == 4);
    }
    SUBCASE("already maximal is unchanged") {
        auto oct = double_wheel(4);
        CHECK(extend_to_triangulation(oct) == oct);
    }
    SUBCASE("four isolated vertices become a 4-vertex triangulation") {
        auto t = extend_to_triangulation(edgeless_embedding(4));
        CHECK(is_maximal_plane(t));
        CHECK(t.edge_count() == 6);
    }
    SUBCASE("restriction to the original edges reproduces the input") {
        for (std::uint64_t seed = 0; seed < 4; ++seed) {
            auto base = random_triangulation(9, seed);
            auto partial = delete_edges(
                base, {base.graph().edges()[0], base.graph().edges()[5],
                       base.graph().edges()[10], base.graph().edges()[11]});
            auto full = extend_to_triangulation(partial);
            std::vector<std::pair<int, int>> added;
            for (auto [u, v] : full.graph().edges())
                if (!partial.graph().has_edge(u, v)) added.push_back({u, v});
            auto back = delete_edges(full, added);
            CHECK(face_signature(back) == face_signature(partial));
            CHECK(back.rotations() == partial.rotations());
        }
    }
}

TEST_CASE("diagonal flips") {
    SUBCASE("any K4 edge flip would create a parallel edge") {
        auto k4 = stacked_triangulation(4, 0);
        for (auto [u, v] : k4.graph().edges())
            CHECK_THROWS_AS(flip(k4, u, v), Error);
    }
    SUBCASE("flip then flip back is the identity") {
        auto oct = double_wheel(4);
        auto once = flip(oct, 0, 1);
        // the created edge joins the two triangle apexes of edge (0,1)
        std::vector<std::pair<int, int>> fresh;
        for (auto [u, v] : once.graph().edges())
            if (!oct.graph().has_edge(u, v)) fresh.push_back({u, v});
        REQUIRE(fresh.size() == 1);
        auto back = flip(once, fresh[0].first, fresh[0].second);
        CHECK(back == oct);
    }
    SUBCASE("octahedron flips into the other 6-vertex class") {
        auto oct = double_wheel(4);
        auto once = flip(oct, 0, 1);
        CHECK(is_maximal_plane(once));
        CHECK(!isomorphic(once.graph(), oct.graph()));
    }
}
