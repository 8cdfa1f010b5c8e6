#include "plansat/props.hpp"

namespace plansat {

bool is_k5_minus_edge(const Graph& g) {
    // The unique simple graph on 5 vertices with 9 edges.
    return g.vertex_count() == 5 && g.edge_count() == 9;
}

bool is_maximal_planar_graph(const Graph& g) {
    int n = g.vertex_count();
    if (n < 3 || g.edge_count() != 3 * n - 6) return false;
    return planar_embed(g).has_value();
}

StructureReport structure_props(const Graph& g, const PlaneEmbedding& emb) {
    if (g.vertex_count() < 5)
        throw Error(ErrorCode::TooFewVertices, "structure properties need n >= 5");
    if (!(emb.graph() == g) || !is_maximal_plane(emb))
        throw Error(ErrorCode::NotMaximalPlanar,
                    "structure properties need a maximal plane embedding of g");

    DegreeProfile p = degree_profile(g);
    StructureReport rep;
    rep.independent_set = true;
    for (auto [u, v] : g.edges())
        if (p.degrees[u] == 3 && p.degrees[v] == 3) {
            rep.independent_set = false;
            rep.adjacent_deg3_pairs.emplace_back(u, v);
        }

    for (int v = 0; v < g.vertex_count(); ++v) {
        if (p.degrees[v] < 4) continue;
        if (p.d3_neighbors[v] > p.degrees[v] / 2) rep.halfdeg_violations.push_back(v);

        int high = 0;
        for (int w : g.neighbors(v))
            if (p.degrees[w] >= 4) ++high;
        if (high < 3) rep.high_nbr_violations.push_back(v);

        bool found = false;
        const auto& nb = g.neighbors(v);
        for (std::size_t i = 0; i < nb.size() && !found; ++i)
            for (std::size_t j = i + 1; j < nb.size() && !found; ++j)
                if (p.degrees[nb[i]] >= 4 && p.degrees[nb[j]] >= 4 &&
                    g.has_edge(nb[i], nb[j]))
                    found = true;
        if (!found) rep.adj_pair_violations.push_back(v);
    }
    if (!rep.high_nbr_violations.empty() && is_k5_minus_edge(g))
        rep.k5_minus_edge_exception = true;
    return rep;
}

BoundCertificate deg3_bound_check(const Graph& g) {
    int n = g.vertex_count();
    if (n < 5 || !is_maximal_planar_graph(g))
        throw Error(ErrorCode::NotMaximalPlanar, "degree-3 bound needs maximal planar, n >= 5");
    int n3 = degree_profile(g).n3;
    return BoundCertificate::make(
        "deg3_count",
        {{"n", n}, {"n3", n3}},
        Rational(3 * n3), Relation::LE, Rational(2 * n - 4));
}

}  // namespace plansat
