#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "plansat/errors.hpp"

namespace plansat {

// Simple undirected graph on vertices 0..n-1. Immutable after construction.
class Graph {
public:
    Graph() = default;
    Graph(int n, const std::vector<std::pair<int, int>>& edge_list);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    bool has_edge(int u, int v) const;

    // Edges as (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;

    Graph with_edge(int u, int v) const;
    Graph without_edges(const std::vector<std::pair<int, int>>& removed) const;

    // Connected components; rep of a component is its smallest vertex.
    std::vector<int> component_of() const;  // vertex -> rep

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;  // sorted neighbor lists
};

struct DegreeProfile {
    std::vector<int> degrees;
    std::vector<int> sorted_degrees;  // non-decreasing
    int n3 = 0;                       // number of degree-3 vertices
    std::vector<int> d3_neighbors;    // per vertex: count of degree-3 neighbors
};

DegreeProfile degree_profile(const Graph& g);

// Injective edge-preserving map from V(H) into V(G).
struct Monomorphism {
    std::vector<int> map;  // map[h_vertex] = g_vertex

    // Re-verifies injectivity and edge preservation edge by edge.
    bool verify(const Graph& h, const Graph& g) const;
};

// Spanning-convention subgraph containment: requires h and g to have the
// same vertex count; isolated vertices of h are assigned after the
// non-isolated core is matched. Exhaustive: nullopt is a proof of
// non-existence. Matching order is descending h-degree with candidate
// filtering by degree and sorted-neighbor-degree dominance.
std::optional<Monomorphism> monomorphism_search(const Graph& h, const Graph& g);

}  // namespace plansat
