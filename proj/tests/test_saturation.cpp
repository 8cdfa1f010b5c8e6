#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "plansat/generators.hpp"
#include "plansat/saturation.hpp"
#include "plansat/solver.hpp"

using namespace plansat;

TEST_CASE("is_plane_saturated basics") {
    auto oct = double_wheel(4);
    SUBCASE("a maximal plane embedding of the host itself is saturated") {
        auto rep = is_plane_saturated(oct, oct.graph());
        CHECK(rep.saturated);
        CHECK(rep.addable_count == 0);
    }
    SUBCASE("the edgeless spanning embedding is not saturated") {
        auto rep = is_plane_saturated(edgeless_embedding(6), oct.graph());
        CHECK(!rep.saturated);
        bool witnessed = false;
        for (const auto& pv : rep.pair_verdicts)
            if (pv.embeds && pv.witness) {
                witnessed = true;
                CHECK(pv.witness->verify(Graph(6, {{pv.pair.u, pv.pair.v}}), oct.graph()));
            }
        CHECK(witnessed);
    }
    SUBCASE("vertex count mismatch and non-subgraph errors") {
        CHECK_THROWS_AS(is_plane_saturated(edgeless_embedding(5), oct.graph()), Error);
        Graph star(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
        auto emb = planar_embed(star);
        CHECK_THROWS_AS(is_plane_saturated(*emb, oct.graph()), Error);
    }
    SUBCASE("threaded evaluation agrees with sequential") {
        auto a = is_plane_saturated(edgeless_embedding(6), oct.graph(), 1);
        auto b = is_plane_saturated(edgeless_embedding(6), oct.graph(), 4);
        CHECK(a.saturated == b.saturated);
        CHECK(a.addable_count == b.addable_count);
        REQUIRE(a.pair_verdicts.size() == b.pair_verdicts.size());
        for (std::size_t i = 0; i < a.pair_verdicts.size(); ++i) {
            CHECK(a.pair_verdicts[i].pair == b.pair_verdicts[i].pair);
            CHECK(a.pair_verdicts[i].embeds == b.pair_verdicts[i].embeds);
        }
    }
}

TEST_CASE("saturation verdicts are invariant under relabeling") {
    std::mt19937_64 rng(23);
    auto host = double_wheel(4).graph();
    for (int trial = 0; trial < 6; ++trial) {
        // a small plane subgraph: path + isolated vertices
        Graph h(6, {{0, 1}, {1, 2}, {2, 3}});
        auto emb = planar_embed(h);
        auto rep = is_plane_saturated(*emb, host);

        std::vector<int> perm{0, 1, 2, 3, 4, 5};
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<std::pair<int, int>> relabeled;
        for (auto [u, v] : h.edges()) relabeled.push_back({perm[u], perm[v]});
        auto emb2 = planar_embed(Graph(6, relabeled));
        auto rep2 = is_plane_saturated(*emb2, host);
        CHECK(rep.saturated == rep2.saturated);
    }
}

TEST_CASE("greedy saturation") {
    auto oct = double_wheel(4);
    SUBCASE("host's own embedding is returned unchanged") {
        auto [h, trace] = greedy_saturate(oct, oct.graph());
        CHECK(h == oct);
        CHECK(trace.edges_added_greedy == 0);
    }
    SUBCASE("from the edgeless embedding: verified saturated, both bounds hold") {
        auto [h, trace] = greedy_saturate(edgeless_embedding(6), oct.graph());
        CHECK(is_plane_saturated(h, oct.graph()).saturated);
        CHECK(6 * h.edge_count() >= 6 + 4);
        CHECK(16 * h.edge_count() > 3 * 6 - 6);
        CHECK(h.edge_count() <= 12);
        for (const auto& cert : trace.certificates) CHECK(cert.satisfied);
    }
    SUBCASE("deterministic") {
        auto a = greedy_saturate(edgeless_embedding(6), oct.graph());
        auto b = greedy_saturate(edgeless_embedding(6), oct.graph());
        CHECK(a.first == b.first);
    }
}

TEST_CASE("lemma1 construction") {
    SUBCASE("icosahedron: certificate bound 27") {
        auto phi = *planar_embed(test::icosahedron_graph());
        auto [h, trace] = lemma1_construct(test::icosahedron_graph(), phi);
        CHECK(is_plane_saturated(h, test::icosahedron_graph()).saturated);
        bool found = false;
        for (const auto& cert : trace.certificates)
            if (cert.formula == "lemma1_edge_bound") {
                found = true;
                CHECK(cert.satisfied);
                // 2e <= 2(3n-6) - (floor(n/2)-1-k) = 60 - 5 at n=12, k=0
                CHECK(cert.rhs == Rational(55));
                CHECK(h.edge_count() <= 27);
            }
        CHECK(found);
    }
    SUBCASE("n=5 phase sizes") {
        auto host = stacked_triangulation(5, 0);
        auto [h, trace] = lemma1_construct(host.graph(), host);
        CHECK(trace.phase1_vertices == 1);  // ceil(5/2) - 2
        CHECK(trace.phase2_vertices == 1);  // floor(5/2) - 1
        CHECK(is_plane_saturated(h, host.graph()).saturated);
    }
    SUBCASE("phase-2 vertices keep degree at most 3") {
        for (std::uint64_t seed = 0; seed < 4; ++seed) {
            auto host = random_triangulation(11, seed);
            auto [h, trace] = lemma1_construct(host.graph(), host);
            CHECK(is_plane_saturated(h, host.graph()).saturated);
            // phase-2 vertices are exactly those isolated after phase 1;
            // recompute: vertices of degree <= 3 in h must number at least
            // floor(n/2) - 1.
            int low = 0;
            for (int v = 0; v < h.vertex_count(); ++v)
                if (h.graph().degree(v) <= 3) ++low;
            CHECK(low >= 11 / 2 - 1);
        }
    }
}

TEST_CASE("many3 construction") {
    SUBCASE("kleetope(octahedron): |W| >= 4 and e <= 27") {
        auto host = kleetope(double_wheel(4));
        auto [h, trace] = many3_construct(host.graph(), host);
        CHECK(is_plane_saturated(h, host.graph()).saturated);
        CHECK(trace.w_size * 3 >= 5 * 8 - 2 * 14);
        CHECK(trace.w_size >= 4);
        CHECK(3 * h.edge_count() <= 3 * (3 * 14 - 6) - (5 * 8 - 2 * 14 - 3));
        CHECK(h.edge_count() <= 27);
        for (const auto& cert : trace.certificates) CHECK(cert.satisfied);
        CHECK(trace.u_size == 6);
    }
    SUBCASE("kleetope(icosahedron): |W| >= 12 and e <= 79") {
        auto base = *planar_embed(test::icosahedron_graph());
        auto host = kleetope(base);
        auto [h, trace] = many3_construct(host.graph(), host);
        CHECK(trace.w_size >= 12);
        CHECK(h.edge_count() <= 79);
        CHECK(is_plane_saturated(h, host.graph()).saturated);
    }
    SUBCASE("k = 0 host fails the precondition") {
        auto oct = double_wheel(4);
        CHECK_THROWS_AS(many3_construct(oct.graph(), oct), Error);
    }
    SUBCASE("the induced H_U is maximal planar (internal claim holds)") {
        for (std::uint64_t seed = 0; seed < 3; ++seed) {
            auto host = kleetope(random_triangulation(6, seed));
            auto [h, trace] = many3_construct(host.graph(), host);
            CHECK(is_plane_saturated(h, host.graph()).saturated);
        }
    }
}

TEST_CASE("upper_bound_auto dispatch") {
    SUBCASE("n = 15 is too small") {
        auto host = random_triangulation(15, 0);
        CHECK_THROWS_AS(upper_bound_auto(host.graph()), Error);
    }
    SUBCASE("kleetope(double_wheel(5)) routes to many3") {
        auto host = kleetope(double_wheel(5));
        CHECK(host.vertex_count() == 17);
        CHECK(degree_profile(host.graph()).n3 == 10);
        auto [h, trace] = upper_bound_auto(host.graph());
        CHECK(trace.dispatched == ConstructionMethod::many3);
        CHECK(is_plane_saturated(h, host.graph()).saturated);
        for (const auto& cert : trace.certificates) CHECK(cert.satisfied);
    }
    SUBCASE("icosahedron-based host routes to lemma1") {
        auto host = kleetope(kleetope(stacked_triangulation(4, 0)));
        // n = 20 + ... check: kleetope(kleetope(K4)): n = 20, n3 = 24? pick a
        // flip-shuffled triangulation with few degree-3 vertices instead.
        auto flat = random_triangulation(20, 1);
        if (degree_profile(flat.graph()).n3 * 500 <
            500 * (20 / 2) - 20 - 500) {
            auto [h, trace] = upper_bound_auto(flat.graph());
            CHECK(trace.dispatched == ConstructionMethod::lemma1);
            CHECK(is_plane_saturated(h, flat.graph()).saturated);
        }
        (void)host;
    }
    SUBCASE("dispatch covers every n >= 16 exactly") {
        // The two regimes overlap for all n >= 16: (0.4 + 1/150)n
        // stays below floor(n/2) - n/500 - 1.
        for (int n = 16; n <= 2000; ++n) {
            // 610n < 1500*floor(n/2) - 3n - 1500
            CHECK(610LL * n < 1500LL * (n / 2) - 3LL * n - 1500LL);
        }
    }
}

TEST_CASE("degree gap bound") {
    SUBCASE("double wheel C20") {
        auto cert = degree_gap_bound(double_wheel(20).graph());
        CHECK(cert.satisfied);
        std::int64_t bound = 0, gap = 0;
        for (auto& [k, v] : cert.inputs) {
            if (k == "bound") bound = v;
            if (k == "gap") gap = v;
        }
        CHECK(gap == 16);
        CHECK(bound == 48);  // (3 - 16/22)*22 - 2
    }
    SUBCASE("icosahedron: zero gap is vacuous") {
        auto cert = degree_gap_bound(test::icosahedron_graph());
        CHECK(!cert.satisfied);
        for (auto& [k, v] : cert.inputs)
            if (k == "bound") CHECK(v == 3 * 12 - 2);
    }
    SUBCASE("G_12: gap 14, bound 107") {
        auto cert = degree_gap_bound(build_Gk(12).graph());
        std::int64_t bound = 0, gap = 0;
        for (auto& [k, v] : cert.inputs) {
            if (k == "bound") bound = v;
            if (k == "gap") gap = v;
        }
        CHECK(gap == 14);
        CHECK(bound == 107);
    }
}

TEST_CASE("lower bounds") {
    SUBCASE("n = 41") {
        auto lb = lower_bounds(build_Gk(12).graph());
        CHECK(lb.sixth.lhs == Rational(45, 6));
        CHECK(lb.sixteenth.lhs == Rational(117, 16));
        CHECK(lb.combined_min_edges == 8);
    }
    SUBCASE("n = 5") {
        auto lb = lower_bounds(stacked_triangulation(5, 0).graph());
        CHECK(lb.sixth.lhs == Rational(3, 2));
        CHECK(lb.combined_min_edges == 2);
    }
    SUBCASE("n = 6") {
        auto lb = lower_bounds(double_wheel(4).graph());
        CHECK(lb.sixth.lhs == Rational(10, 6));
        CHECK(lb.combined_min_edges == 2);
    }
}
