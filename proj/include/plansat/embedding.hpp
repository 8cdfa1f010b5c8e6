#pragma once

#include <compare>
#include <map>
#include <vector>

#include "plansat/graph.hpp"

namespace plansat {

struct DirEdge {
    int from = -1;
    int to = -1;

    auto operator<=>(const DirEdge&) const = default;
    DirEdge reversed() const { return {to, from}; }
};

// Reserved face id for the region of an embedding with no edges at all.
inline constexpr DirEdge kIsolatedRegionId{-1, -1};

// Anchor of a component: either the root marker, or a directed edge x->y of
// an already-placed component meaning "this component lies in the face to
// the left of x->y".
struct Anchor {
    int x = -1;
    int y = -1;

    bool is_root() const { return x < 0; }
    static Anchor root() { return {}; }
    static Anchor at(int x, int y) { return {x, y}; }
    bool operator==(const Anchor&) const = default;
};

// Combinatorial plane embedding on the sphere: a rotation system (full
// counter-clockwise neighbor order per non-isolated vertex) plus nesting
// anchors per component.
//
// Normative face-traversal rule: the successor of directed edge u->v is
// v->w where w immediately precedes u in the rotation at v (cyclically).
// A non-root component joins its anchor face through the boundary walk
// that carries the component's least directed edge (a->b with {a,b} the
// lexicographically least edge, a < b).
class PlaneEmbedding {
public:
    PlaneEmbedding() = default;

    // Validates rotations (permutations of neighbor sets), anchors (one per
    // component, forest-shaped, exactly one root unless the embedding has no
    // edges) and the Euler relation v - e + f = 1 + c.
    static PlaneEmbedding create(Graph graph, std::vector<std::vector<int>> rotation,
                                 std::map<int, Anchor> anchors);

    // Single-component or edge-heavy helpers where every vertex is in one
    // component; anchors reduce to {rep: root}.
    static PlaneEmbedding connected(Graph graph, std::vector<std::vector<int>> rotation);

    const Graph& graph() const { return graph_; }
    int vertex_count() const { return graph_.vertex_count(); }
    int edge_count() const { return graph_.edge_count(); }
    const std::vector<int>& rotation(int v) const { return rotation_[v]; }
    const std::vector<std::vector<int>>& rotations() const { return rotation_; }
    const std::map<int, Anchor>& anchors() const { return anchors_; }

    bool operator==(const PlaneEmbedding& o) const {
        return graph_ == o.graph_ && rotation_ == o.rotation_ && anchors_ == o.anchors_;
    }

private:
    Graph graph_;
    std::vector<std::vector<int>> rotation_;
    std::map<int, Anchor> anchors_;  // component rep (min vertex) -> anchor
};

// One face: its id (least directed edge on the boundary, or the reserved id),
// boundary walks (each rotated to start at its least directed edge, listed in
// id order), and the components anchored inside it.
struct Face {
    DirEdge id = kIsolatedRegionId;
    std::vector<std::vector<DirEdge>> walks;
    std::vector<int> contents;           // component reps anchored in this face
    std::vector<int> boundary_vertices;  // sorted unique walk vertices
    std::vector<int> incident_vertices;  // boundary plus isolated contents
};

// Derived face structure of an embedding. Faces are sorted by id.
struct FaceStructure {
    std::vector<Face> faces;

    explicit FaceStructure(const PlaneEmbedding& e);

    const Face* find(DirEdge id) const;
    // Face whose boundary carries directed edge d (left face of d).
    const Face* face_left_of(DirEdge d) const;
    int face_index_left_of(DirEdge d) const;

    bool all_triangles() const;

private:
    std::map<DirEdge, int> left_face_;  // directed edge -> face index
};

struct AddablePair {
    int u = -1;
    int v = -1;
    DirEdge face = kIsolatedRegionId;

    auto operator<=>(const AddablePair&) const = default;
};

// Successor of u->v under the normative traversal rule.
DirEdge face_successor(const std::vector<std::vector<int>>& rotation, DirEdge d);

// All boundary walks of a rotation system, canonically rotated and sorted.
std::vector<std::vector<DirEdge>> trace_walks(const Graph& g,
                                              const std::vector<std::vector<int>>& rotation);

std::vector<Face> faces(const PlaneEmbedding& e);

// Non-adjacent vertex pairs sharing a face; a pair sharing k faces appears
// k times. Sorted by (u, v, face id).
std::vector<AddablePair> addable_pairs(const PlaneEmbedding& e);

PlaneEmbedding insert_edge(const PlaneEmbedding& e, const AddablePair& p);

PlaneEmbedding delete_edges(const PlaneEmbedding& e,
                            const std::vector<std::pair<int, int>>& removed);

// Embedding induced on `keep`, relabeled by the order-preserving map onto
// 0..|keep|-1.
PlaneEmbedding induced_plane_subgraph(const PlaneEmbedding& e, const std::vector<int>& keep);

// Plane supergraph on the same vertex set with all faces triangles and
// e = 3v - 6; the input is exactly the restriction of the output to the
// input's edges.
PlaneEmbedding extend_to_triangulation(const PlaneEmbedding& e);

// Diagonal flip of edge uv lying on triangles uvx, uvy: replaces uv by xy.
PlaneEmbedding flip(const PlaneEmbedding& e, int u, int v);

bool is_maximal_plane(const PlaneEmbedding& e);

// Plane embedding of an abstract graph, or nothing when g is non-planar.
std::optional<PlaneEmbedding> planar_embed(const Graph& g);

}  // namespace plansat
