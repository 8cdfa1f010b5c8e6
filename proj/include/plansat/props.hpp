#pragma once

#include "plansat/embedding.hpp"
#include "plansat/rational.hpp"

namespace plansat {

// Per-vertex verdicts for the degree-3 structure properties of maximal
// planar graphs with n >= 5:
//   (i)   degree-3 vertices form an independent set
//   (ii)  every vertex of degree >= 4 has at most floor(d/2) degree-3 neighbors
//   (iii) every vertex of degree >= 4 has at least three neighbors of degree
//         >= 4, except in K5 minus an edge
//   (iv)  every vertex of degree >= 4 has two adjacent neighbors, both of
//         degree >= 4
struct StructureReport {
    bool independent_set = false;
    std::vector<std::pair<int, int>> adjacent_deg3_pairs;  // witnesses for (i)

    std::vector<int> halfdeg_violations;    // (ii) failures
    std::vector<int> high_nbr_violations;   // (iii) failures
    bool k5_minus_edge_exception = false;   // (iii) failed but g is K5 minus an edge
    std::vector<int> adj_pair_violations;   // (iv) failures

    bool all_pass() const {
        return independent_set && halfdeg_violations.empty() &&
               (high_nbr_violations.empty() || k5_minus_edge_exception) &&
               adj_pair_violations.empty();
    }
};

StructureReport structure_props(const Graph& g, const PlaneEmbedding& emb);

// Exact check 3*n3 <= 2n - 4 with equality (sharpness) flagged.
BoundCertificate deg3_bound_check(const Graph& g);

bool is_k5_minus_edge(const Graph& g);

// Abstract-graph maximal planarity: e = 3n - 6 and planar.
bool is_maximal_planar_graph(const Graph& g);

}  // namespace plansat
