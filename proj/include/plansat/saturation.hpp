#pragma once

#include <optional>
#include <string>

#include "plansat/embedding.hpp"
#include "plansat/rational.hpp"

namespace plansat {

// Verdict for one addable pair of H: either an embedding witness for H+uv
// into G, or an exhaustive refutation.
struct PairVerdict {
    AddablePair pair;
    bool embeds = false;
    std::optional<Monomorphism> witness;
};

struct SaturationReport {
    bool saturated = false;
    int addable_count = 0;  // distinct non-adjacent pairs sharing a face
    std::vector<PairVerdict> pair_verdicts;
    Monomorphism base_witness;  // embedding of H itself into G
};

// Plane-saturation predicate: every addable pair of h, when added to the
// abstract graph, must fail to embed in g. Throws NotASubgraph when h itself
// does not embed. `threads` > 1 evaluates pair verdicts concurrently.
SaturationReport is_plane_saturated(const PlaneEmbedding& h, const Graph& g, int threads = 1);

enum class ConstructionMethod { greedy, lemma1, many3, auto_dispatch };

struct ConstructionTrace {
    ConstructionMethod method = ConstructionMethod::greedy;
    ConstructionMethod dispatched = ConstructionMethod::greedy;  // for auto
    int edges_added_greedy = 0;
    int phase1_vertices = 0;   // lemma1: vertices added while growing faces
    int phase2_vertices = 0;   // lemma1: vertices placed in distinct faces
    int u_size = 0;            // many3: |U|
    int w_size = 0;            // many3: |W|
    int extension_edges = 0;   // many3: edges added to reach min degree 4
    DirEdge face_T = kIsolatedRegionId;  // many3: face receiving W
    int final_edges = 0;
    std::vector<BoundCertificate> certificates;
};

// Adds the lexicographically least addable pair whose addition still embeds
// in g, until none remains. Deterministic.
std::pair<PlaneEmbedding, ConstructionTrace> greedy_saturate(const PlaneEmbedding& h,
                                                             const Graph& g);

// Face-growth construction: grow ceil(n/2)-2 vertices along shared faces,
// drop the rest into distinct triangular faces, then saturate greedily.
std::pair<PlaneEmbedding, ConstructionTrace> lemma1_construct(const Graph& g,
                                                              const PlaneEmbedding& phi);

// Degree-3-heavy construction: keep the subgraph induced by degree >= 4
// vertices, patch its degree-3 vertices with one edge each, pile the unused
// degree-3 vertices into one triangular face, then saturate greedily.
std::pair<PlaneEmbedding, ConstructionTrace> many3_construct(const Graph& g,
                                                             const PlaneEmbedding& phi);

// Theorem-1 dispatch: lemma1 when 500*n3 < 500*floor(n/2) - n - 500, else
// many3; asserts 300*e(H) < 899*n on the result. Requires n >= 16.
std::pair<PlaneEmbedding, ConstructionTrace> upper_bound_auto(const Graph& g);

// Largest degree gap as an exact rational c* = (d_{k+1}-d_k)/n and the
// implied bound (3-c*)n - 2 = 3n - gap - 2.
BoundCertificate degree_gap_bound(const Graph& g);

// The two universal lower bounds (n+4)/6 and (3n-6)/16 as exact rationals,
// plus the combined integer threshold.
struct LowerBounds {
    BoundCertificate sixth;      // sat >= (n+4)/6
    BoundCertificate sixteenth;  // sat > (3n-6)/16
    std::int64_t combined_min_edges = 0;
};

LowerBounds lower_bounds(const Graph& g);

}  // namespace plansat
