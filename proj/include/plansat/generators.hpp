#pragma once

#include <cstdint>
#include <vector>

#include "plansat/embedding.hpp"

namespace plansat {

// Cycle C_n as a plane embedding (two faces).
PlaneEmbedding cycle_embedding(int n);

// C_k plus two hubs adjacent to every cycle vertex; 2k triangular faces.
PlaneEmbedding double_wheel(int k);

// One new degree-3 vertex inside every face of a maximal plane embedding,
// numbered in canonical face order after the existing vertices.
PlaneEmbedding kleetope(const PlaneEmbedding& e);

// Stacked triangulation: K4 plus repeated vertex insertion into a randomly
// chosen face. Deterministic per (n, seed).
PlaneEmbedding stacked_triangulation(int n, std::uint64_t seed);

// Stacked triangulation shuffled by random diagonal flips.
PlaneEmbedding random_triangulation(int n, std::uint64_t seed);

// Designated vertices of the G_k construction.
struct GkVertices {
    int v1, v2, u, a, b, x, y, z;
};

// Maximal planar G_k on 3k+5 vertices: double wheel over C_k, kleetope,
// then a triangle x,y,z wired into the face (a, b, u).
PlaneEmbedding build_Gk(int k, GkVertices* designated = nullptr);

// Plane H_k on 3k+5 vertices with k+29 edges: K4 with a cycle in one face,
// two 11-leaf stars (one linked to the K4) in a second, isolated vertices in
// a third.
PlaneEmbedding build_Hk(int k);

// All triangulations on n vertices (4 <= n <= max_n), one embedding per
// isomorphism class of the abstract graph, found by flip-closure BFS from
// the stacked triangulation.
std::vector<PlaneEmbedding> catalog_triangulations(int n, int max_n = 8);

// Canonical adjacency form under all vertex permutations with degree
// refinement pruning; equal forms = isomorphic graphs. Feasible for n <= 8.
std::vector<std::uint64_t> canonical_form(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

}  // namespace plansat
