#pragma once

// Test-only oracles, independent of the library's search paths.

#include <algorithm>
#include <numeric>
#include <vector>

#include "plansat/graph.hpp"

namespace plansat::test {

// Spanning-monomorphism existence by checking all n! assignments.
inline bool mono_exists_bruteforce(const Graph& h, const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    auto edges = h.edges();
    do {
        bool ok = true;
        for (auto [u, v] : edges)
            if (!g.has_edge(perm[u], perm[v])) {
                ok = false;
                break;
            }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// Standard fixtures.
inline Graph octahedron_graph() {
    // double wheel over C4; 4-regular on 6 vertices
    return Graph(6, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}, {1, 4}, {2, 4}, {3, 4},
                     {0, 5}, {1, 5}, {2, 5}, {3, 5}});
}

inline Graph icosahedron_graph() {
    // apex 0, upper rim 1..5, lower rim 6..10, apex 11
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= 5; ++i) e.push_back({0, i});
    for (int i = 1; i <= 5; ++i) e.push_back({i, i % 5 + 1});
    for (int i = 6; i <= 10; ++i) e.push_back({i, (i - 5) % 5 + 6});
    for (int i = 1; i <= 5; ++i) e.push_back({i, i + 5});
    for (int i = 1; i <= 5; ++i) e.push_back({i, i % 5 + 6});
    for (int i = 6; i <= 10; ++i) e.push_back({i, 11});
    return Graph(12, e);
}

inline Graph k4_graph() {
    return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

inline Graph k5_graph() {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) e.push_back({i, j});
    return Graph(5, e);
}

inline Graph k5_minus_edge_graph() {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            if (!(i == 3 && j == 4)) e.push_back({i, j});
    return Graph(5, e);
}

inline Graph k33_graph() {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 3; ++i)
        for (int j = 3; j < 6; ++j) e.push_back({i, j});
    return Graph(6, e);
}

}  // namespace plansat::test
