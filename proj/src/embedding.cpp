#include "plansat/embedding.hpp"

#include <algorithm>
#include <set>

namespace plansat {

namespace {

int index_of(const std::vector<int>& rotation, int neighbor) {
    for (std::size_t i = 0; i < rotation.size(); ++i)
        if (rotation[i] == neighbor) return static_cast<int>(i);
    return -1;
}

// Rotate a closed walk so its least directed edge comes first.
void canonicalize_walk(std::vector<DirEdge>& walk) {
    auto least = std::min_element(walk.begin(), walk.end());
    std::rotate(walk.begin(), least, walk.end());
}

}  // namespace

// Successor of u->v: v->w with w immediately preceding u in the rotation at v.
DirEdge face_successor(const std::vector<std::vector<int>>& rotation, DirEdge d) {
    const auto& rot = rotation[d.to];
    int i = index_of(rot, d.from);
    if (i < 0) throw Error(ErrorCode::MalformedRotation, "directed edge not in rotation");
    int w = rot[(i + rot.size() - 1) % rot.size()];
    return {d.to, w};
}

// All boundary walks of a rotation system, canonically rotated, sorted by
// least directed edge.
std::vector<std::vector<DirEdge>> trace_walks(const Graph& g,
                                               const std::vector<std::vector<int>>& rotation) {
    std::set<DirEdge> pending;
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int w : g.neighbors(v)) pending.insert({v, w});

    std::vector<std::vector<DirEdge>> walks;
    while (!pending.empty()) {
        DirEdge start = *pending.begin();
        std::vector<DirEdge> walk;
        DirEdge d = start;
        do {
            if (!pending.erase(d))
                throw Error(ErrorCode::MalformedRotation, "face traversal revisits an edge");
            walk.push_back(d);
            d = face_successor(rotation, d);
        } while (d != start);
        canonicalize_walk(walk);
        walks.push_back(std::move(walk));
    }
    std::sort(walks.begin(), walks.end());
    return walks;
}

FaceStructure::FaceStructure(const PlaneEmbedding& e) {
    const Graph& g = e.graph();
    int n = g.vertex_count();
    std::vector<int> comp = g.component_of();
    std::set<int> reps(comp.begin(), comp.end());

    // Every component must carry exactly one anchor entry.
    if (e.anchors().size() != reps.size())
        throw Error(ErrorCode::MalformedAnchor, "anchor count does not match component count");
    for (int r : reps)
        if (!e.anchors().count(r))
            throw Error(ErrorCode::MalformedAnchor,
                        "missing anchor for component " + std::to_string(r));

    if (g.edge_count() == 0) {
        for (auto& [rep, anchor] : e.anchors())
            if (!anchor.is_root())
                throw Error(ErrorCode::MalformedAnchor,
                            "edgeless embedding requires root anchors");
        Face region;
        region.id = kIsolatedRegionId;
        region.contents.assign(reps.begin(), reps.end());
        region.incident_vertices = region.contents;
        faces.push_back(std::move(region));
        return;
    }

    int root = -1;
    for (auto& [rep, anchor] : e.anchors()) {
        if (anchor.is_root()) {
            if (root != -1)
                throw Error(ErrorCode::MalformedAnchor, "multiple root components");
            root = rep;
        } else {
            if (!g.has_edge(anchor.x, anchor.y))
                throw Error(ErrorCode::MalformedAnchor, "anchor references a non-edge");
            if (comp[anchor.x] == rep)
                throw Error(ErrorCode::MalformedAnchor, "component anchored to itself");
        }
    }
    if (root == -1) throw Error(ErrorCode::MalformedAnchor, "no root component");
    if (g.degree(root) == 0 && g.edge_count() > 0) {
        // Root must carry edges, otherwise nothing can anchor to it.
        bool root_has_edges = false;
        for (int v = 0; v < n; ++v)
            if (comp[v] == root && g.degree(v) > 0) root_has_edges = true;
        if (!root_has_edges)
            throw Error(ErrorCode::MalformedAnchor, "root component has no edges");
    }

    auto walks = trace_walks(g, e.rotations());
    std::vector<int> walk_comp(walks.size());
    std::map<DirEdge, int> walk_of;
    for (std::size_t i = 0; i < walks.size(); ++i) {
        walk_comp[i] = comp[walks[i][0].from];
        for (DirEdge d : walks[i]) walk_of[d] = static_cast<int>(i);
    }

    // The walk through which a non-root component joins its anchor face:
    // the one carrying the component's least directed edge.
    std::map<int, int> outward_walk;
    for (std::size_t i = 0; i < walks.size(); ++i) {
        int rep = walk_comp[i];
        auto it = outward_walk.find(rep);
        if (it == outward_walk.end() || walks[i][0] < walks[it->second][0])
            outward_walk[rep] = static_cast<int>(i);
    }

    // Assemble faces: root walks seed faces, then components in anchor
    // (forest) order.
    struct ProtoFace {
        std::vector<int> walk_ids;
        std::vector<int> contents;
    };
    std::vector<ProtoFace> proto;
    std::vector<int> face_of_walk(walks.size(), -1);

    for (std::size_t i = 0; i < walks.size(); ++i)
        if (walk_comp[i] == root) {
            face_of_walk[i] = static_cast<int>(proto.size());
            proto.push_back({{static_cast<int>(i)}, {}});
        }

    std::set<int> placed{root};
    std::vector<int> todo;
    for (int r : reps)
        if (r != root) todo.push_back(r);
    while (!todo.empty()) {
        bool progress = false;
        std::vector<int> still;
        for (int rep : todo) {
            Anchor anchor = e.anchors().at(rep);
            auto it = walk_of.find({anchor.x, anchor.y});
            int host_walk = it->second;
            if (face_of_walk[host_walk] == -1 || !placed.count(comp[anchor.x])) {
                still.push_back(rep);
                continue;
            }
            int f = face_of_walk[host_walk];
            proto[f].contents.push_back(rep);
            if (g.degree(rep) > 0 || outward_walk.count(rep)) {
                int wout = outward_walk.at(rep);
                face_of_walk[wout] = f;
                proto[f].walk_ids.push_back(wout);
                for (std::size_t i = 0; i < walks.size(); ++i)
                    if (walk_comp[static_cast<int>(i)] == rep &&
                        face_of_walk[i] == -1) {
                        face_of_walk[i] = static_cast<int>(proto.size());
                        proto.push_back({{static_cast<int>(i)}, {}});
                    }
            }
            placed.insert(rep);
            progress = true;
        }
        if (!progress)
            throw Error(ErrorCode::MalformedAnchor, "anchor references form a cycle");
        todo = std::move(still);
    }

    for (auto& pf : proto) {
        Face face;
        std::sort(pf.walk_ids.begin(), pf.walk_ids.end(),
                  [&](int a, int b) { return walks[a][0] < walks[b][0]; });
        for (int w : pf.walk_ids) face.walks.push_back(walks[w]);
        face.id = face.walks.front().front();
        std::sort(pf.contents.begin(), pf.contents.end());
        face.contents = pf.contents;
        std::set<int> boundary;
        for (auto& walk : face.walks)
            for (DirEdge d : walk) boundary.insert(d.from);
        face.boundary_vertices.assign(boundary.begin(), boundary.end());
        std::set<int> incident = boundary;
        for (int rep : face.contents)
            if (g.degree(rep) == 0) incident.insert(rep);
        face.incident_vertices.assign(incident.begin(), incident.end());
        faces.push_back(std::move(face));
    }
    std::sort(faces.begin(), faces.end(),
              [](const Face& a, const Face& b) { return a.id < b.id; });

    for (std::size_t fi = 0; fi < faces.size(); ++fi)
        for (auto& walk : faces[fi].walks)
            for (DirEdge d : walk) left_face_[d] = static_cast<int>(fi);

    // Euler relation on the sphere: v - e + f = 1 + c.
    long long c = static_cast<long long>(reps.size());
    if (n - g.edge_count() + static_cast<long long>(faces.size()) != 1 + c)
        throw Error(ErrorCode::MalformedAnchor, "Euler relation violated");
}

const Face* FaceStructure::find(DirEdge id) const {
    for (const Face& f : faces)
        if (f.id == id) return &f;
    return nullptr;
}

int FaceStructure::face_index_left_of(DirEdge d) const {
    auto it = left_face_.find(d);
    return it == left_face_.end() ? -1 : it->second;
}

const Face* FaceStructure::face_left_of(DirEdge d) const {
    int i = face_index_left_of(d);
    return i < 0 ? nullptr : &faces[i];
}

bool FaceStructure::all_triangles() const {
    for (const Face& f : faces)
        if (f.walks.size() != 1 || f.walks[0].size() != 3) return false;
    return true;
}

PlaneEmbedding PlaneEmbedding::create(Graph graph, std::vector<std::vector<int>> rotation,
                                      std::map<int, Anchor> anchors) {
    int n = graph.vertex_count();
    if (static_cast<int>(rotation.size()) != n)
        throw Error(ErrorCode::MalformedRotation, "rotation table size mismatch");
    for (int v = 0; v < n; ++v) {
        auto sorted = rotation[v];
        std::sort(sorted.begin(), sorted.end());
        if (sorted != graph.neighbors(v))
            throw Error(ErrorCode::MalformedRotation,
                        "rotation at " + std::to_string(v) +
                            " is not a permutation of its neighbors");
        // Canonical cyclic representative: least neighbor first.
        if (!rotation[v].empty()) {
            auto least = std::min_element(rotation[v].begin(), rotation[v].end());
            std::rotate(rotation[v].begin(), least, rotation[v].end());
        }
    }
    PlaneEmbedding e;
    e.graph_ = std::move(graph);
    e.rotation_ = std::move(rotation);
    e.anchors_ = std::move(anchors);
    FaceStructure validate(e);  // throws on malformed anchors / rotations
    return e;
}

PlaneEmbedding PlaneEmbedding::connected(Graph graph, std::vector<std::vector<int>> rotation) {
    std::vector<int> comp = graph.component_of();
    std::map<int, Anchor> anchors;
    std::set<int> reps(comp.begin(), comp.end());
    if (reps.size() != 1 && graph.vertex_count() > 0)
        throw Error(ErrorCode::BadParameter, "connected() requires one component");
    for (int r : reps) anchors[r] = Anchor::root();
    return create(std::move(graph), std::move(rotation), std::move(anchors));
}

std::vector<Face> faces(const PlaneEmbedding& e) { return FaceStructure(e).faces; }

std::vector<AddablePair> addable_pairs(const PlaneEmbedding& e) {
    FaceStructure fs(e);
    std::vector<AddablePair> out;
    for (const Face& f : fs.faces) {
        const auto& verts = f.incident_vertices;
        for (std::size_t i = 0; i < verts.size(); ++i)
            for (std::size_t j = i + 1; j < verts.size(); ++j)
                if (!e.graph().has_edge(verts[i], verts[j]))
                    out.push_back({verts[i], verts[j], f.id});
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_maximal_plane(const PlaneEmbedding& e) {
    int v = e.vertex_count();
    if (v < 3) return false;
    if (e.edge_count() != 3 * v - 6) return false;
    return FaceStructure(e).all_triangles();
}

}  // namespace plansat
