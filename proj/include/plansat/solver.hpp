#pragma once

#include <cstdint>
#include <optional>

#include "plansat/saturation.hpp"

namespace plansat {

struct SolverLimits {
    int max_n = 8;
    std::optional<double> time_limit_seconds;
    std::optional<int> edge_cap;  // search layers m <= edge_cap only
};

struct SolverStats {
    std::int64_t scaffolds = 0;
    std::int64_t subsets = 0;
    std::int64_t arrangements = 0;
    std::int64_t mono_calls = 0;
};

struct SolverResult {
    int sat_value = -1;
    std::optional<PlaneEmbedding> witness;
    int scaffold_index = -1;  // catalog index of the scaffold behind the witness
    std::vector<std::pair<int, int>> witness_edges;
    SolverStats stats;
    bool exhaustive = false;
};

// Minimum edge count over all plane-saturated spanning subgraphs of g,
// by ascending-size enumeration of edge subsets of triangulation scaffolds
// with all component nestings. Exhaustive unless the time limit interrupts,
// in which case the greedy upper bound is returned with exhaustive = false.
SolverResult exact_sat(const Graph& g, const SolverLimits& limits = {});

// Same value by a structurally different enumeration: all edge subsets of g,
// all rotation systems, all nestings. Test oracle; n <= 6.
SolverResult exact_sat_naive(const Graph& g);

// True iff no plane-saturated subgraph of g has fewer edges than h.
bool verify_not_improvable(const Graph& g, const PlaneEmbedding& h,
                           const SolverLimits& limits = {});

// Spanning embedding with no edges (every vertex isolated in one region).
PlaneEmbedding edgeless_embedding(int n);

}  // namespace plansat
