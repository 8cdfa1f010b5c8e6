#include <algorithm>
#include <cassert>
#include <set>

#include "plansat/embedding.hpp"

namespace plansat {

namespace {

int index_of(const std::vector<int>& rotation, int neighbor) {
    for (std::size_t i = 0; i < rotation.size(); ++i)
        if (rotation[i] == neighbor) return static_cast<int>(i);
    return -1;
}

// First corner of vertex t on face f in canonical walk order; returns the
// incoming neighbor a of the corner (..., a->t, t->b, ...).
int first_corner_from(const Face& f, int t) {
    for (const auto& walk : f.walks)
        for (const DirEdge& d : walk)
            if (d.to == t) return d.from;
    return -1;
}

// Splice neighbor `w` into the rotation of `t` at its first corner on face
// f. The corner (a->t, t->b) has b = pred(a), so inserting w right before a
// places the new edge inside f.
void splice_at_corner(std::vector<int>& rot, const Face& f, int t, int w) {
    int a = first_corner_from(f, t);
    int i = index_of(rot, a);
    rot.insert(rot.begin() + i, w);
}

}  // namespace

PlaneEmbedding insert_edge(const PlaneEmbedding& e, const AddablePair& p) {
    const Graph& g = e.graph();
    int n = g.vertex_count();
    int u = p.u, v = p.v;
    if (u < 0 || v < 0 || u >= n || v >= n || u == v)
        throw Error(ErrorCode::NotAddable, "invalid vertex pair");
    if (g.has_edge(u, v)) throw Error(ErrorCode::NotAddable, "pair already adjacent");

    FaceStructure fs(e);
    int fi = -1;
    for (std::size_t i = 0; i < fs.faces.size(); ++i)
        if (fs.faces[i].id == p.face) fi = static_cast<int>(i);
    if (fi < 0) throw Error(ErrorCode::NotAddable, "no such face");
    const Face& f = fs.faces[fi];
    auto incident = [&](int t) {
        return std::binary_search(f.incident_vertices.begin(), f.incident_vertices.end(), t);
    };
    if (!incident(u) || !incident(v))
        throw Error(ErrorCode::NotAddable, "pair does not share the face");

    auto rot = e.rotations();
    if (g.degree(u) > 0)
        splice_at_corner(rot[u], f, u, v);
    else
        rot[u] = {v};
    if (g.degree(v) > 0)
        splice_at_corner(rot[v], f, v, u);
    else
        rot[v] = {u};

    std::vector<int> comp = g.component_of();
    int ru = comp[u], rv = comp[v];
    std::map<int, Anchor> anchors = e.anchors();

    if (ru != rv) {
        Anchor au = anchors.at(ru), av = anchors.at(rv);
        int merged = std::min(ru, rv);
        if (g.edge_count() == 0) {
            // First edge of an all-isolated embedding: the new component is
            // the base; everything else re-anchors to its single face.
            anchors.clear();
            for (int w = 0; w < n; ++w)
                if (w != u && w != v)
                    anchors[w] = Anchor::at(std::min(u, v), std::max(u, v));
            anchors[merged] = Anchor::root();
        } else {
            anchors.erase(ru);
            anchors.erase(rv);
            if (au.is_root() || av.is_root()) {
                anchors[merged] = Anchor::root();
            } else {
                int fu = fs.face_index_left_of({au.x, au.y});
                int fv = fs.face_index_left_of({av.x, av.y});
                Anchor keep;
                if (fv != fi) {
                    keep = av;  // v's component owns the insertion face
                } else if (fu != fi) {
                    keep = au;
                } else {
                    // Both components are guests of the face; keep the anchor
                    // that does not reference the other merged part.
                    keep = (ru < rv) ? au : av;
                    int other = (ru < rv) ? rv : ru;
                    if (comp[keep.x] == other) keep = (ru < rv) ? av : au;
                }
                anchors[merged] = keep;
            }
        }
    }

    return PlaneEmbedding::create(g.with_edge(u, v), std::move(rot), std::move(anchors));
}

namespace {

// Face partition tracked through edge deletions: live walks plus, per face,
// its walk ids and the isolated vertices it contains.
struct DeleteState {
    std::vector<std::vector<DirEdge>> walks;
    std::vector<char> walk_live;
    struct PFace {
        std::vector<int> walk_ids;
        std::set<int> isolated;
        bool live = true;
    };
    std::vector<PFace> faces;
    std::vector<int> face_of_walk;

    void drop_walk(int w) {
        walk_live[w] = 0;
        auto& ids = faces[face_of_walk[w]].walk_ids;
        ids.erase(std::find(ids.begin(), ids.end(), w));
    }

    int add_walk(std::vector<DirEdge> walk, int face) {
        int id = static_cast<int>(walks.size());
        walks.push_back(std::move(walk));
        walk_live.push_back(1);
        face_of_walk.push_back(face);
        faces[face].walk_ids.push_back(id);
        return id;
    }
};

std::map<int, Anchor> derive_anchors(const Graph& g, const DeleteState& st) {
    std::vector<int> comp = g.component_of();
    std::set<int> reps(comp.begin(), comp.end());
    std::map<int, Anchor> anchors;
    if (g.edge_count() == 0) {
        for (int r : reps) anchors[r] = Anchor::root();
        return anchors;
    }
    int base = -1;
    for (int v = 0; v < g.vertex_count() && base < 0; ++v)
        if (g.degree(v) > 0) base = comp[v];

    // Component <-> face incidence is a tree; walk it from the base and
    // anchor each component at the least directed edge of the walk through
    // which its parent component bounds the shared face.
    int nf = static_cast<int>(st.faces.size());
    std::vector<std::vector<int>> comps_on(nf);
    std::map<int, std::vector<int>> comp_faces;
    for (int f = 0; f < nf; ++f) {
        if (!st.faces[f].live) continue;
        std::set<int> cs;
        for (int w : st.faces[f].walk_ids) cs.insert(comp[st.walks[w][0].from]);
        for (int iso : st.faces[f].isolated) cs.insert(comp[iso]);
        comps_on[f].assign(cs.begin(), cs.end());
        for (int w : st.faces[f].walk_ids) comp_faces[comp[st.walks[w][0].from]].push_back(f);
    }

    std::set<int> seen_comp{base}, seen_face;
    std::vector<std::pair<int, int>> queue;  // (face, owner comp)
    for (int f : comp_faces[base]) {
        if (seen_face.insert(f).second) queue.emplace_back(f, base);
    }
    anchors[base] = Anchor::root();
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        auto [f, owner] = queue[qi];
        DirEdge least{-1, -1};
        for (int w : st.faces[f].walk_ids)
            if (comp[st.walks[w][0].from] == owner)
                for (const DirEdge& d : st.walks[w])
                    if (least.from < 0 || d < least) least = d;
        for (int c : comps_on[f]) {
            if (!seen_comp.insert(c).second) continue;
            anchors[c] = Anchor::at(least.from, least.to);
            for (int f2 : comp_faces[c])
                if (seen_face.insert(f2).second) queue.emplace_back(f2, c);
        }
    }
    if (seen_comp.size() != reps.size())
        throw Error(ErrorCode::InternalClaimFailed, "face incidence not connected");
    return anchors;
}

}  // namespace

PlaneEmbedding delete_edges(const PlaneEmbedding& e,
                            const std::vector<std::pair<int, int>>& removed) {
    const Graph& g = e.graph();
    std::set<std::pair<int, int>> rem;
    for (auto [a, b] : removed) {
        int lo = std::min(a, b), hi = std::max(a, b);
        if (!g.has_edge(lo, hi)) throw Error(ErrorCode::UnknownEdge, "edge not in embedding");
        rem.insert({lo, hi});
    }
    if (rem.empty()) return e;

    FaceStructure fs(e);
    DeleteState st;
    for (const Face& f : fs.faces) {
        DeleteState::PFace pf;
        for (const auto& w : f.walks) {
            int id = static_cast<int>(st.walks.size());
            st.walks.push_back(w);
            st.walk_live.push_back(1);
            st.face_of_walk.push_back(static_cast<int>(st.faces.size()));
            pf.walk_ids.push_back(id);
        }
        for (int rep : f.contents)
            if (g.degree(rep) == 0) pf.isolated.insert(rep);
        st.faces.push_back(std::move(pf));
    }

    auto rot = e.rotations();
    for (auto [u, v] : rem) {
        int w1 = -1, w2 = -1, i1 = -1, i2 = -1;
        for (std::size_t w = 0; w < st.walks.size(); ++w) {
            if (!st.walk_live[w]) continue;
            for (std::size_t i = 0; i < st.walks[w].size(); ++i) {
                if (st.walks[w][i] == DirEdge{u, v}) {
                    w1 = static_cast<int>(w);
                    i1 = static_cast<int>(i);
                }
                if (st.walks[w][i] == DirEdge{v, u}) {
                    w2 = static_cast<int>(w);
                    i2 = static_cast<int>(i);
                }
            }
        }
        rot[u].erase(rot[u].begin() + index_of(rot[u], v));
        rot[v].erase(rot[v].begin() + index_of(rot[v], u));

        if (w1 == w2) {
            // Bridge: the walk splits in place; both pieces stay in the face.
            const auto walk = st.walks[w1];
            int len = static_cast<int>(walk.size());
            int face = st.face_of_walk[w1];
            st.drop_walk(w1);
            auto segment = [&](int from, int to) {  // exclusive cyclic range
                std::vector<DirEdge> seg;
                for (int i = (from + 1) % len; i != to; i = (i + 1) % len)
                    seg.push_back(walk[i]);
                return seg;
            };
            auto s_v = segment(i1, i2);  // piece around v
            auto s_u = segment(i2, i1);  // piece around u
            if (s_v.empty())
                st.faces[face].isolated.insert(v);
            else {
                auto least = std::min_element(s_v.begin(), s_v.end());
                std::rotate(s_v.begin(), least, s_v.end());
                st.add_walk(std::move(s_v), face);
            }
            if (s_u.empty())
                st.faces[face].isolated.insert(u);
            else {
                auto least = std::min_element(s_u.begin(), s_u.end());
                std::rotate(s_u.begin(), least, s_u.end());
                st.add_walk(std::move(s_u), face);
            }
        } else {
            // Two distinct faces merge across the deleted edge.
            int f1 = st.face_of_walk[w1], f2 = st.face_of_walk[w2];
            if (f1 == f2)
                throw Error(ErrorCode::InternalClaimFailed,
                            "edge bounds one face through two walks");
            const auto wa = st.walks[w1];
            const auto wb = st.walks[w2];
            st.drop_walk(w1);
            st.drop_walk(w2);
            std::vector<DirEdge> merged;
            int la = static_cast<int>(wa.size()), lb = static_cast<int>(wb.size());
            for (int i = (i1 + 1) % la; i != i1; i = (i + 1) % la) merged.push_back(wa[i]);
            for (int i = (i2 + 1) % lb; i != i2; i = (i + 1) % lb) merged.push_back(wb[i]);
            if (!merged.empty()) {
                auto least = std::min_element(merged.begin(), merged.end());
                std::rotate(merged.begin(), least, merged.end());
            }
            // Fold f2 into f1.
            for (int w : st.faces[f2].walk_ids) {
                st.face_of_walk[w] = f1;
                st.faces[f1].walk_ids.push_back(w);
            }
            st.faces[f1].isolated.insert(st.faces[f2].isolated.begin(),
                                         st.faces[f2].isolated.end());
            st.faces[f2].walk_ids.clear();
            st.faces[f2].isolated.clear();
            st.faces[f2].live = false;
            if (merged.empty()) {
                st.faces[f1].isolated.insert(u);
                st.faces[f1].isolated.insert(v);
            } else {
                st.add_walk(std::move(merged), f1);
            }
        }
    }

    // Drop faces that lost all structure (they merged away).
    for (auto& pf : st.faces)
        if (pf.live && pf.walk_ids.empty() && pf.isolated.empty()) pf.live = false;

    Graph g2 = g.without_edges({rem.begin(), rem.end()});
    auto anchors = derive_anchors(g2, st);
    return PlaneEmbedding::create(std::move(g2), std::move(rot), std::move(anchors));
}

PlaneEmbedding induced_plane_subgraph(const PlaneEmbedding& e, const std::vector<int>& keep) {
    const Graph& g = e.graph();
    int n = g.vertex_count();
    std::vector<char> in_keep(n, 0);
    for (int v : keep) {
        if (v < 0 || v >= n) throw Error(ErrorCode::BadParameter, "keep vertex out of range");
        in_keep[v] = 1;
    }
    int k = 0;
    std::vector<int> relabel(n, -1);
    for (int v = 0; v < n; ++v)
        if (in_keep[v]) relabel[v] = k++;
    if (k == n) return e;

    std::vector<std::pair<int, int>> crossing;
    for (auto [u, v] : g.edges())
        if (!in_keep[u] || !in_keep[v]) crossing.emplace_back(u, v);
    PlaneEmbedding d = delete_edges(e, crossing);

    std::vector<std::pair<int, int>> kept_edges;
    for (auto [u, v] : d.graph().edges()) kept_edges.emplace_back(relabel[u], relabel[v]);
    Graph g2(k, kept_edges);

    std::vector<std::vector<int>> rot(k);
    for (int v = 0; v < n; ++v)
        if (in_keep[v])
            for (int w : d.rotation(v)) rot[relabel[v]].push_back(relabel[w]);

    std::map<int, Anchor> anchors;
    if (g2.edge_count() == 0) {
        std::vector<int> comp = g2.component_of();
        for (int v = 0; v < k; ++v)
            if (comp[v] == v) anchors[v] = Anchor::root();
    } else {
        for (auto& [rep, anchor] : d.anchors()) {
            if (!in_keep[rep]) continue;  // dropped isolated vertex
            int new_rep = relabel[rep];
            if (anchor.is_root())
                anchors[new_rep] = Anchor::root();
            else
                anchors[new_rep] = Anchor::at(relabel[anchor.x], relabel[anchor.y]);
        }
    }
    return PlaneEmbedding::create(std::move(g2), std::move(rot), std::move(anchors));
}

namespace {

AddablePair least_shared_face(const PlaneEmbedding& e, int a, int b) {
    FaceStructure fs(e);
    for (const Face& f : fs.faces) {
        bool ha = std::binary_search(f.incident_vertices.begin(), f.incident_vertices.end(), a);
        bool hb = std::binary_search(f.incident_vertices.begin(), f.incident_vertices.end(), b);
        if (ha && hb) return {std::min(a, b), std::max(a, b), f.id};
    }
    throw Error(ErrorCode::NotAddable, "vertices share no face");
}

}  // namespace

PlaneEmbedding extend_to_triangulation(const PlaneEmbedding& e) {
    if (e.vertex_count() < 3)
        throw Error(ErrorCode::TooFewVertices, "triangulation needs at least 3 vertices");
    PlaneEmbedding cur = e;

    // Connect anchored contents: per face, a path from the face's canonical
    // first walk vertex through the contents in rep order.
    for (;;) {
        FaceStructure fs(cur);
        const Face* target = nullptr;
        for (const Face& f : fs.faces)
            if (!f.contents.empty()) {
                target = &f;
                break;
            }
        if (!target) break;
        std::vector<int> chain;
        std::vector<int> comp = cur.graph().component_of();
        for (int rep : target->contents) {
            if (cur.graph().degree(rep) == 0) {
                chain.push_back(rep);
            } else {
                for (int b : target->boundary_vertices)
                    if (comp[b] == rep) {
                        chain.push_back(b);
                        break;
                    }
            }
        }
        int prev;
        std::size_t start = 0;
        if (target->walks.empty()) {
            prev = chain[0];
            start = 1;
        } else {
            prev = target->id.from;
        }
        for (std::size_t i = start; i < chain.size(); ++i) {
            cur = insert_edge(cur, least_shared_face(cur, prev, chain[i]));
            prev = chain[i];
        }
    }

    // Chord every face down to triangles: first valid corner chord in
    // canonical walk order, fanning from the walk start where possible.
    for (;;) {
        FaceStructure fs(cur);
        const Face* big = nullptr;
        for (const Face& f : fs.faces)
            if (f.walks.size() != 1 || f.walks[0].size() > 3) {
                big = &f;
                break;
            }
        if (!big) break;
        if (big->walks.size() != 1)
            throw Error(ErrorCode::InternalClaimFailed, "multi-walk face after connecting");
        const auto& walk = big->walks[0];
        int a = -1, c = -1;
        for (std::size_t i = 0; i < walk.size(); ++i) {
            int x = walk[i].from;
            int y = walk[(i + 1) % walk.size()].to;
            if (x != y && !cur.graph().has_edge(x, y)) {
                a = x;
                c = y;
                break;
            }
        }
        if (a < 0) {
            for (std::size_t i = 0; i < big->boundary_vertices.size() && a < 0; ++i)
                for (std::size_t j = i + 1; j < big->boundary_vertices.size() && a < 0; ++j)
                    if (!cur.graph().has_edge(big->boundary_vertices[i],
                                              big->boundary_vertices[j])) {
                        a = big->boundary_vertices[i];
                        c = big->boundary_vertices[j];
                    }
        }
        if (a < 0)
            throw Error(ErrorCode::InternalClaimFailed, "face admits no chord");
        cur = insert_edge(cur, {std::min(a, c), std::max(a, c), big->id});
    }

    if (!is_maximal_plane(cur))
        throw Error(ErrorCode::InternalClaimFailed, "extension did not reach a triangulation");
    return cur;
}

PlaneEmbedding flip(const PlaneEmbedding& e, int u, int v) {
    if (!is_maximal_plane(e))
        throw Error(ErrorCode::NotMaximalPlanar, "flip requires a maximal plane embedding");
    if (!e.graph().has_edge(u, v)) throw Error(ErrorCode::UnknownEdge, "flip edge missing");
    FaceStructure fs(e);
    const Face* f1 = fs.face_left_of({u, v});
    const Face* f2 = fs.face_left_of({v, u});
    auto third = [&](const Face& f) {
        for (const DirEdge& d : f.walks[0])
            if (d.from != u && d.from != v) return d.from;
        return -1;
    };
    int x = third(*f1), y = third(*f2);
    if (x < 0 || y < 0 || x == y) throw Error(ErrorCode::NotFlippable, "degenerate flip");
    if (e.graph().has_edge(x, y))
        throw Error(ErrorCode::FlipCreatesParallelEdge, "flip target edge already present");

    auto rot = e.rotations();
    rot[u].erase(rot[u].begin() + index_of(rot[u], v));
    rot[v].erase(rot[v].begin() + index_of(rot[v], u));
    rot[x].insert(rot[x].begin() + index_of(rot[x], v), y);
    rot[y].insert(rot[y].begin() + index_of(rot[y], u), x);

    Graph g2 = e.graph().without_edges({{u, v}}).with_edge(x, y);
    std::map<int, Anchor> anchors{{0, Anchor::root()}};
    return PlaneEmbedding::create(std::move(g2), std::move(rot), std::move(anchors));
}

}  // namespace plansat
