#include "plansat/saturation.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <thread>

#include "plansat/props.hpp"

namespace plansat {

namespace {

void require_host(const Graph& g, const PlaneEmbedding& phi) {
    if (!(phi.graph() == g))
        throw Error(ErrorCode::BadParameter, "embedding does not match host graph");
    if (!is_maximal_plane(phi))
        throw Error(ErrorCode::NotMaximalPlanar, "host must be a maximal plane embedding");
}

std::vector<std::pair<int, int>> distinct_pairs(const std::vector<AddablePair>& pairs) {
    std::set<std::pair<int, int>> s;
    for (const auto& p : pairs) s.insert({p.u, p.v});
    return {s.begin(), s.end()};
}

BoundCertificate verify_lower_bounds_on(const Graph& host, int e_h,
                                        std::vector<BoundCertificate>& out) {
    int n = host.vertex_count();
    out.push_back(BoundCertificate::make("sat_lower_sixth_verified",
                                         {{"n", n}, {"e_H", e_h}},
                                         Rational(6 * e_h), Relation::GE, Rational(n + 4)));
    out.push_back(BoundCertificate::make("sat_lower_sixteenth_verified",
                                         {{"n", n}, {"e_H", e_h}},
                                         Rational(16 * e_h), Relation::GT, Rational(3 * n - 6)));
    return out.back();
}

}  // namespace

SaturationReport is_plane_saturated(const PlaneEmbedding& h, const Graph& g, int threads) {
    if (h.vertex_count() != g.vertex_count())
        throw Error(ErrorCode::VertexCountMismatch, "subgraph must span the host vertex set");
    auto base = monomorphism_search(h.graph(), g);
    if (!base) throw Error(ErrorCode::NotASubgraph, "h does not embed in g");

    SaturationReport rep;
    rep.base_witness = *base;
    auto pairs = addable_pairs(h);
    auto uv = distinct_pairs(pairs);
    rep.addable_count = static_cast<int>(uv.size());

    std::vector<PairVerdict> verdicts(uv.size());
    std::atomic<std::size_t> next{0};
    auto work = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= uv.size()) break;
            auto [u, v] = uv[i];
            PairVerdict pv;
            pv.pair = {u, v, kIsolatedRegionId};
            if (g.has_edge(base->map[u], base->map[v])) {
                pv.embeds = true;
                pv.witness = *base;
            } else {
                auto found = monomorphism_search(h.graph().with_edge(u, v), g);
                pv.embeds = found.has_value();
                pv.witness = found;
            }
            verdicts[i] = std::move(pv);
        }
    };
    if (threads > 1) {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    } else {
        work();
    }

    std::map<std::pair<int, int>, const PairVerdict*> by_pair;
    for (std::size_t i = 0; i < uv.size(); ++i) by_pair[uv[i]] = &verdicts[i];
    rep.saturated = true;
    for (const auto& p : pairs) {
        const PairVerdict* v = by_pair.at({p.u, p.v});
        PairVerdict out = *v;
        out.pair = p;
        if (out.embeds) rep.saturated = false;
        rep.pair_verdicts.push_back(std::move(out));
    }
    return rep;
}

std::pair<PlaneEmbedding, ConstructionTrace> greedy_saturate(const PlaneEmbedding& h,
                                                             const Graph& g) {
    if (h.vertex_count() != g.vertex_count())
        throw Error(ErrorCode::VertexCountMismatch, "subgraph must span the host vertex set");
    auto witness = monomorphism_search(h.graph(), g);
    if (!witness) throw Error(ErrorCode::NotASubgraph, "h does not embed in g");

    ConstructionTrace trace;
    trace.method = ConstructionMethod::greedy;
    PlaneEmbedding cur = h;
    std::set<std::pair<int, int>> refuted;  // monotone: H grows, refutations stay valid

    for (;;) {
        bool inserted = false;
        for (const AddablePair& p : addable_pairs(cur)) {
            if (refuted.count({p.u, p.v})) continue;
            if (g.has_edge(witness->map[p.u], witness->map[p.v])) {
                cur = insert_edge(cur, p);
                inserted = true;
            } else {
                auto found = monomorphism_search(cur.graph().with_edge(p.u, p.v), g);
                if (found) {
                    witness = found;
                    cur = insert_edge(cur, p);
                    inserted = true;
                } else {
                    refuted.insert({p.u, p.v});
                    continue;
                }
            }
            ++trace.edges_added_greedy;
            break;
        }
        if (!inserted) break;
    }
    trace.final_edges = cur.edge_count();
    verify_lower_bounds_on(g, cur.edge_count(), trace.certificates);
    return {std::move(cur), std::move(trace)};
}

std::pair<PlaneEmbedding, ConstructionTrace> lemma1_construct(const Graph& g,
                                                              const PlaneEmbedding& phi) {
    require_host(g, phi);
    int n = g.vertex_count();
    if (n < 5) throw Error(ErrorCode::TooFewVertices, "construction needs n >= 5");

    FaceStructure fs(phi);
    int nf = static_cast<int>(fs.faces.size());
    int quota = (n + 1) / 2 - 2;  // ceil(n/2) - 2 vertices beyond the seed face

    // Grow a face set by BFS over shared edges from the canonical least face.
    std::vector<char> included(nf, 0), enqueued(nf, 0);
    std::vector<char> in_h(n, 0);
    std::set<std::pair<int, int>> h_edges;
    std::vector<int> queue{0};
    enqueued[0] = 1;
    int added = 0;
    for (std::size_t qi = 0; qi < queue.size() && added < quota; ++qi) {
        int f = queue[qi];
        const auto& walk = fs.faces[f].walks[0];
        int fresh = 0;
        for (const DirEdge& d : walk)
            if (!in_h[d.from]) ++fresh;
        if (qi > 0 && fresh > 1)
            throw Error(ErrorCode::InternalClaimFailed, "face adds more than one vertex");
        if (fresh == 1 && added == quota) continue;
        if (fresh == 1) ++added;
        included[f] = 1;
        for (const DirEdge& d : walk) {
            in_h[d.from] = 1;
            h_edges.insert({std::min(d.from, d.to), std::max(d.from, d.to)});
            int across = fs.face_index_left_of(d.reversed());
            if (!enqueued[across]) {
                enqueued[across] = 1;
                queue.push_back(across);
            }
        }
    }
    if (added < quota)
        throw Error(ErrorCode::InternalClaimFailed, "face growth exhausted before quota");

    std::vector<std::pair<int, int>> complement;
    for (auto [u, v] : g.edges())
        if (!h_edges.count({u, v})) complement.emplace_back(u, v);
    PlaneEmbedding ht = delete_edges(phi, complement);

    // Remaining vertices go one each into the canonically least triangular
    // faces of H_t.
    FaceStructure hf(ht);
    std::vector<DirEdge> triangles;
    for (const Face& f : hf.faces)
        if (f.walks.size() == 1 && f.walks[0].size() == 3) triangles.push_back(f.id);
    std::vector<int> remaining;
    for (int v = 0; v < n; ++v)
        if (!in_h[v]) remaining.push_back(v);
    if (triangles.size() < remaining.size())
        throw Error(ErrorCode::InsufficientTriangularFaces,
                    "fewer triangular faces than vertices to place");

    std::map<int, Anchor> anchors = ht.anchors();
    for (std::size_t i = 0; i < remaining.size(); ++i)
        anchors[remaining[i]] = Anchor::at(triangles[i].from, triangles[i].to);
    PlaneEmbedding seeded =
        PlaneEmbedding::create(ht.graph(), ht.rotations(), std::move(anchors));

    auto [sat, gtrace] = greedy_saturate(seeded, g);
    ConstructionTrace trace;
    trace.method = ConstructionMethod::lemma1;
    trace.phase1_vertices = added;
    trace.phase2_vertices = static_cast<int>(remaining.size());
    trace.edges_added_greedy = gtrace.edges_added_greedy;
    trace.final_edges = sat.edge_count();
    trace.certificates = gtrace.certificates;

    int k = degree_profile(g).n3;
    if (k <= n / 2 - 1) {
        trace.certificates.push_back(BoundCertificate::make(
            "lemma1_edge_bound",
            {{"n", n}, {"k", k}, {"e_H", sat.edge_count()}},
            Rational(2 * sat.edge_count()), Relation::LE,
            Rational(2 * (3 * n - 6) - (n / 2 - 1 - k))));
    }
    return {std::move(sat), std::move(trace)};
}

std::pair<PlaneEmbedding, ConstructionTrace> many3_construct(const Graph& g,
                                                             const PlaneEmbedding& phi) {
    require_host(g, phi);
    int n = g.vertex_count();
    if (n < 5) throw Error(ErrorCode::TooFewVertices, "construction needs n >= 5");
    DegreeProfile prof = degree_profile(g);
    int k = prof.n3;
    if (5 * k - 2 * n <= 0)
        throw Error(ErrorCode::PreconditionFailed, "5k - 2n <= 0: no spare degree-3 vertices");

    std::vector<int> u_set;
    for (int v = 0; v < n; ++v)
        if (prof.degrees[v] >= 4) u_set.push_back(v);

    // The plane subgraph induced by U must itself be maximal planar.
    PlaneEmbedding hu_rel = induced_plane_subgraph(phi, u_set);
    if (!is_maximal_plane(hu_rel))
        throw Error(ErrorCode::InternalClaimFailed, "induced subgraph on U not maximal planar");

    std::vector<char> in_u(n, 0);
    for (int v : u_set) in_u[v] = 1;
    std::vector<std::pair<int, int>> crossing;
    for (auto [a, b] : g.edges())
        if (!in_u[a] || !in_u[b]) crossing.emplace_back(a, b);
    PlaneEmbedding cur = delete_edges(phi, crossing);

    // One extra edge per degree-3 vertex of H_U, taken inside phi.
    std::set<int> used;
    int extensions = 0;
    for (int u : u_set) {
        if (cur.graph().degree(u) != 3) continue;
        FaceStructure cfs(cur);
        bool done = false;
        for (int w : g.neighbors(u)) {
            if (in_u[w]) continue;
            for (const Face& f : cfs.faces) {
                const auto& iv = f.incident_vertices;
                if (std::binary_search(iv.begin(), iv.end(), u) &&
                    std::binary_search(iv.begin(), iv.end(), w)) {
                    cur = insert_edge(cur, {std::min(u, w), std::max(u, w), f.id});
                    used.insert(w);
                    ++extensions;
                    done = true;
                    break;
                }
            }
            if (done) break;
        }
        if (!done)
            throw Error(ErrorCode::InternalClaimFailed,
                        "no placeable extension edge for a deficient vertex");
    }
    for (int u : u_set)
        if (cur.graph().degree(u) < 4)
            throw Error(ErrorCode::InternalClaimFailed, "vertex of U below degree 4 after patch");

    std::vector<int> w_set;
    for (int v = 0; v < n; ++v)
        if (!in_u[v] && !used.count(v)) w_set.push_back(v);

    // All of W goes inside one triangular face T.
    FaceStructure cfs(cur);
    DirEdge t_id = kIsolatedRegionId;
    for (const Face& f : cfs.faces)
        if (f.walks.size() == 1 && f.walks[0].size() == 3) {
            t_id = f.id;
            break;
        }
    if (t_id == kIsolatedRegionId)
        throw Error(ErrorCode::InternalClaimFailed, "no triangular face survives the patch");
    std::map<int, Anchor> anchors = cur.anchors();
    for (int w : w_set) anchors[w] = Anchor::at(t_id.from, t_id.to);
    PlaneEmbedding seeded = PlaneEmbedding::create(cur.graph(), cur.rotations(), anchors);

    auto [sat, gtrace] = greedy_saturate(seeded, g);
    ConstructionTrace trace;
    trace.method = ConstructionMethod::many3;
    trace.u_size = static_cast<int>(u_set.size());
    trace.w_size = static_cast<int>(w_set.size());
    trace.extension_edges = extensions;
    trace.face_T = t_id;
    trace.edges_added_greedy = gtrace.edges_added_greedy;
    trace.final_edges = sat.edge_count();
    trace.certificates = gtrace.certificates;
    trace.certificates.push_back(BoundCertificate::make(
        "many3_w_bound",
        {{"n", n}, {"k", k}, {"W", trace.w_size}},
        Rational(3 * trace.w_size), Relation::GE, Rational(5 * k - 2 * n)));
    trace.certificates.push_back(BoundCertificate::make(
        "many3_edge_bound",
        {{"n", n}, {"k", k}, {"e_H", sat.edge_count()}},
        Rational(3 * sat.edge_count()), Relation::LE,
        Rational(3 * (3 * n - 6) - (5 * k - 2 * n - 3))));
    return {std::move(sat), std::move(trace)};
}

std::pair<PlaneEmbedding, ConstructionTrace> upper_bound_auto(const Graph& g) {
    int n = g.vertex_count();
    if (n < 16) throw Error(ErrorCode::TooFewVertices, "dispatch needs n >= 16");
    if (!is_maximal_planar_graph(g))
        throw Error(ErrorCode::NotMaximalPlanar, "dispatch needs a maximal planar host");
    PlaneEmbedding phi = *planar_embed(g);
    int k = degree_profile(g).n3;

    std::pair<PlaneEmbedding, ConstructionTrace> result =
        (500LL * k < 500LL * (n / 2) - n - 500)
            ? lemma1_construct(g, phi)
            : many3_construct(g, phi);
    result.second.dispatched = result.second.method;
    result.second.method = ConstructionMethod::auto_dispatch;
    result.second.certificates.push_back(BoundCertificate::make(
        "theorem1_epsilon_300",
        {{"n", n}, {"k", k}, {"e_H", result.first.edge_count()}},
        Rational(300 * result.first.edge_count()), Relation::LT, Rational(899 * n)));
    return result;
}

BoundCertificate degree_gap_bound(const Graph& g) {
    if (!is_maximal_planar_graph(g))
        throw Error(ErrorCode::NotMaximalPlanar, "degree gap bound needs a maximal planar host");
    int n = g.vertex_count();
    auto d = degree_profile(g).sorted_degrees;
    std::int64_t gap = 0;
    int gap_index = 0;
    for (int i = 0; i + 1 < n; ++i)
        if (d[i + 1] - d[i] > gap) {
            gap = d[i + 1] - d[i];
            gap_index = i + 1;
        }
    // (3 - gap/n) * n - 2 collapses to the integer 3n - gap - 2.
    return BoundCertificate::make(
        "prop1_degree_gap",
        {{"n", n}, {"k", gap_index}, {"gap", gap}, {"bound", 3 * n - gap - 2}},
        Rational(gap), Relation::GT, Rational(0));
}

LowerBounds lower_bounds(const Graph& g) {
    if (!is_maximal_planar_graph(g))
        throw Error(ErrorCode::NotMaximalPlanar, "lower bounds need a maximal planar host");
    int n = g.vertex_count();
    LowerBounds lb;
    Rational sixth(n + 4, 6);
    Rational sixteenth(3 * n - 6, 16);
    std::int64_t min_sixth = sixth.ceil();
    std::int64_t min_sixteenth = sixteenth.floor() + 1;  // strict bound
    lb.sixth = BoundCertificate::make("lower_sixth",
                                      {{"n", n}, {"min_edges", min_sixth}},
                                      sixth, Relation::GE, Rational(0));
    lb.sixteenth = BoundCertificate::make("lower_sixteenth",
                                          {{"n", n}, {"min_edges", min_sixteenth}},
                                          sixteenth, Relation::GE, Rational(0));
    lb.combined_min_edges = std::max(min_sixth, min_sixteenth);
    return lb;
}

}  // namespace plansat
