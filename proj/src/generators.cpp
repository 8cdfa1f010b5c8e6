#include "plansat/generators.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace plansat {

namespace {

int index_of(const std::vector<int>& rotation, int neighbor) {
    for (std::size_t i = 0; i < rotation.size(); ++i)
        if (rotation[i] == neighbor) return static_cast<int>(i);
    return -1;
}

// Subdivide a triangular face (walk a->b, b->c, c->a) with a new vertex w:
// splice w before the incoming neighbor at each corner, rot[w] = [a, b, c].
void insert_vertex_in_triangle(std::vector<std::vector<int>>& rot,
                               const std::vector<DirEdge>& walk, int w) {
    for (const DirEdge& d : walk) {
        auto& r = rot[d.to];
        r.insert(r.begin() + index_of(r, d.from), w);
    }
    rot[w] = {walk[0].from, walk[1].from, walk[2].from};
}

std::vector<std::pair<int, int>> k4_edges() {
    return {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
}

std::vector<std::vector<int>> k4_rotations() {
    return {{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}};
}

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
    return rng() % bound;  // reproducibility matters here, not uniformity
}

}  // namespace

PlaneEmbedding cycle_embedding(int n) {
    if (n < 3) throw Error(ErrorCode::BadParameter, "cycle needs at least 3 vertices");
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> rot(n);
    for (int i = 0; i < n; ++i) {
        int next = (i + 1) % n;
        edges.emplace_back(std::min(i, next), std::max(i, next));
        rot[i] = {(i + n - 1) % n, next};
    }
    return PlaneEmbedding::connected(Graph(n, edges), std::move(rot));
}

PlaneEmbedding double_wheel(int k) {
    if (k < 3) throw Error(ErrorCode::BadParameter, "double wheel needs k >= 3");
    int n = k + 2, hub1 = k, hub2 = k + 1;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> rot(n);
    for (int i = 0; i < k; ++i) {
        int next = (i + 1) % k;
        edges.emplace_back(std::min(i, next), std::max(i, next));
        edges.emplace_back(i, hub1);
        edges.emplace_back(i, hub2);
        rot[i] = {next, hub1, (i + k - 1) % k, hub2};
        rot[hub1].push_back(i);
        rot[hub2].push_back((k - i) % k);
    }
    return PlaneEmbedding::connected(Graph(n, edges), std::move(rot));
}

PlaneEmbedding kleetope(const PlaneEmbedding& e) {
    if (e.vertex_count() < 4)
        throw Error(ErrorCode::BadParameter, "kleetope needs at least 4 vertices");
    if (!is_maximal_plane(e))
        throw Error(ErrorCode::NotMaximalPlanar, "kleetope input must be maximal plane");
    int n = e.vertex_count();
    FaceStructure fs(e);
    int f = static_cast<int>(fs.faces.size());

    std::vector<std::vector<int>> rot = e.rotations();
    rot.resize(n + f);
    std::vector<std::pair<int, int>> edges = e.graph().edges();
    for (int j = 0; j < f; ++j) {
        const auto& walk = fs.faces[j].walks[0];
        int w = n + j;
        insert_vertex_in_triangle(rot, walk, w);
        for (const DirEdge& d : walk) edges.emplace_back(std::min(d.from, w), std::max(d.from, w));
    }
    return PlaneEmbedding::connected(Graph(n + f, edges), std::move(rot));
}

PlaneEmbedding stacked_triangulation(int n, std::uint64_t seed) {
    if (n < 4) throw Error(ErrorCode::BadParameter, "stacked triangulation needs n >= 4");
    std::mt19937_64 rng(seed);
    std::vector<std::vector<int>> rot = k4_rotations();
    rot.resize(n);
    std::vector<std::pair<int, int>> edges = k4_edges();
    for (int v = 4; v < n; ++v) {
        Graph g(v, edges);
        std::vector<std::vector<int>> cur(rot.begin(), rot.begin() + v);
        auto walks = trace_walks(g, cur);  // connected: every walk is a face
        const auto& walk = walks[draw(rng, walks.size())];
        insert_vertex_in_triangle(rot, walk, v);
        for (const DirEdge& d : walk) edges.emplace_back(d.from, v);
    }
    return PlaneEmbedding::connected(Graph(n, edges), std::move(rot));
}

PlaneEmbedding random_triangulation(int n, std::uint64_t seed) {
    PlaneEmbedding e = stacked_triangulation(n, seed);
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    int attempts = 8 * n;
    for (int t = 0; t < attempts; ++t) {
        auto edges = e.graph().edges();
        auto [u, v] = edges[draw(rng, edges.size())];
        try {
            e = flip(e, u, v);
        } catch (const Error&) {
            // unflippable edge: skip
        }
    }
    return e;
}

PlaneEmbedding build_Gk(int k, GkVertices* designated) {
    if (k < 6) throw Error(ErrorCode::BadParameter, "G_k needs k >= 6");
    int v1 = k, v2 = k + 1;
    PlaneEmbedding dw = double_wheel(k);

    // Kleetope vertex for double-wheel face j is k+2+j in canonical face
    // order; u is the first one whose face touches v2.
    FaceStructure dwf(dw);
    int u = -1;
    std::vector<DirEdge> u_walk;
    for (std::size_t j = 0; j < dwf.faces.size(); ++j) {
        const auto& b = dwf.faces[j].boundary_vertices;
        if (std::binary_search(b.begin(), b.end(), v2)) {
            u = k + 2 + static_cast<int>(j);
            break;
        }
    }
    PlaneEmbedding gk1 = kleetope(dw);

    // Host face (a, b, u): the face at u avoiding v2; roles follow the walk
    // orientation u->a, a->b, b->u.
    FaceStructure fs(gk1);
    const Face* host = nullptr;
    for (const Face& f : fs.faces) {
        const auto& b = f.boundary_vertices;
        if (std::binary_search(b.begin(), b.end(), u) &&
            !std::binary_search(b.begin(), b.end(), v2)) {
            host = &f;
            break;
        }
    }
    if (!host) throw Error(ErrorCode::InternalClaimFailed, "no host face for the xyz triangle");
    const auto& walk = host->walks[0];
    int a = -1, b = -1;
    for (std::size_t i = 0; i < 3; ++i)
        if (walk[i].from == u) {
            a = walk[i].to;
            b = walk[(i + 1) % 3].to;
        }

    int n = 3 * k + 5;
    int x = 3 * k + 2, y = 3 * k + 3, z = 3 * k + 4;
    std::vector<std::vector<int>> rot = gk1.rotations();
    rot.resize(n);
    // Interior faces of the subdivision, oriented consistently with the
    // host walk: (u,a,x),(x,a,z),(a,b,z),(b,u,z),(x,z,y),(x,y,u),(y,z,u).
    rot[x] = {a, z, y, u};
    rot[y] = {x, z, u};
    rot[z] = {a, b, u, y, x};
    rot[u].insert(rot[u].begin() + index_of(rot[u], b), {x, y, z});
    rot[a].insert(rot[a].begin() + index_of(rot[a], u), {z, x});
    rot[b].insert(rot[b].begin() + index_of(rot[b], a), {z});

    std::vector<std::pair<int, int>> edges = gk1.graph().edges();
    for (auto [p, q] : std::vector<std::pair<int, int>>{
             {x, y}, {y, z}, {x, z}, {u, x}, {u, y}, {u, z}, {x, a}, {z, a}, {z, b}})
        edges.emplace_back(std::min(p, q), std::max(p, q));

    if (designated) *designated = {v1, v2, u, a, b, x, y, z};
    return PlaneEmbedding::connected(Graph(n, edges), std::move(rot));
}

namespace {

AddablePair least_shared(const PlaneEmbedding& e, int p, int q) {
    FaceStructure fs(e);
    for (const Face& f : fs.faces) {
        const auto& iv = f.incident_vertices;
        if (std::binary_search(iv.begin(), iv.end(), p) &&
            std::binary_search(iv.begin(), iv.end(), q))
            return {std::min(p, q), std::max(p, q), f.id};
    }
    throw Error(ErrorCode::InternalClaimFailed, "construction pair shares no face");
}

}  // namespace

PlaneEmbedding build_Hk(int k) {
    if (k < 12) throw Error(ErrorCode::BadParameter, "H_k needs k >= 12 (2k-23 >= 1)");
    int n = 3 * k + 5;
    int c0 = 4;                    // cycle vertices c0 .. c0+k-1
    int s1 = k + 4, s2 = k + 16;   // star centers; leaves follow each
    int iso0 = k + 28;             // isolated vertices iso0 .. n-1

    Graph k4(n, k4_edges());
    std::vector<std::vector<int>> rot = k4_rotations();
    rot.resize(n);

    // K4 faces in canonical order; the first plays the outer region, the
    // bounded ones are F1 (cycle), F2 (stars), F3 (isolated vertices).
    PlaneEmbedding base = PlaneEmbedding::create(
        Graph(4, k4_edges()), k4_rotations(), {{0, Anchor::root()}});
    FaceStructure bf(base);
    DirEdge f1 = bf.faces[1].id, f2 = bf.faces[2].id, f3 = bf.faces[3].id;
    int link_target = f2.from;

    std::map<int, Anchor> anchors{{0, Anchor::root()}};
    for (int c = c0; c < c0 + k; ++c) anchors[c] = Anchor::at(f1.from, f1.to);
    for (int s = s1; s <= s1 + 11; ++s) anchors[s] = Anchor::at(f2.from, f2.to);
    for (int s = s2; s <= s2 + 11; ++s) anchors[s] = Anchor::at(f2.from, f2.to);
    for (int w = iso0; w < n; ++w) anchors[w] = Anchor::at(f3.from, f3.to);

    PlaneEmbedding e = PlaneEmbedding::create(k4, std::move(rot), std::move(anchors));
    for (int c = c0; c + 1 < c0 + k; ++c) e = insert_edge(e, least_shared(e, c, c + 1));
    e = insert_edge(e, least_shared(e, c0, c0 + k - 1));
    for (int leaf = s1 + 1; leaf <= s1 + 11; ++leaf)
        e = insert_edge(e, least_shared(e, s1, leaf));
    for (int leaf = s2 + 1; leaf <= s2 + 11; ++leaf)
        e = insert_edge(e, least_shared(e, s2, leaf));
    e = insert_edge(e, least_shared(e, s2, link_target));
    return e;
}

std::vector<std::uint64_t> canonical_form(const Graph& g) {
    int n = g.vertex_count();
    if (n > 12) throw Error(ErrorCode::TooLarge, "canonical form limited to n <= 12");
    std::vector<std::uint16_t> adj(n, 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= (1u << v);
        adj[v] |= (1u << u);
    }

    // Maximize the lower-triangle bit rows over all relabelings; branches
    // whose next row falls below the best-known row are pruned.
    std::vector<std::uint16_t> best(n, 0);
    std::vector<int> perm;            // new label -> old vertex
    std::vector<char> used(n, 0);
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int p, int q) { return g.degree(p) > g.degree(q); });

    auto dfs = [&](auto&& self, int level) -> void {
        if (level == n) return;
        for (int v : order) {
            if (used[v]) continue;
            std::uint16_t row = 0;
            for (int t = 0; t < level; ++t)
                if (adj[v] & (1u << perm[t])) row |= (1u << t);
            if (row < best[level]) continue;
            if (row > best[level]) {
                best[level] = row;
                std::fill(best.begin() + level + 1, best.end(), 0);
            }
            used[v] = 1;
            perm.push_back(v);
            self(self, level + 1);
            perm.pop_back();
            used[v] = 0;
        }
    };
    dfs(dfs, 0);

    std::vector<std::uint64_t> packed{static_cast<std::uint64_t>(n)};
    std::uint64_t word = 0;
    int filled = 0;
    for (int i = 0; i < n; ++i) {
        word = (word << 16) | best[i];
        if (++filled == 4) {
            packed.push_back(word);
            word = 0;
            filled = 0;
        }
    }
    if (filled) packed.push_back(word);
    return packed;
}

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    auto da = degree_profile(a).sorted_degrees;
    auto db = degree_profile(b).sorted_degrees;
    if (da != db) return false;
    return canonical_form(a) == canonical_form(b);
}

std::vector<PlaneEmbedding> catalog_triangulations(int n, int max_n) {
    if (n < 4 || n > max_n)
        throw Error(ErrorCode::BadParameter,
                    "catalog supports 4 <= n <= " + std::to_string(max_n));
    std::vector<PlaneEmbedding> result;
    std::set<std::vector<std::uint64_t>> seen;
    std::vector<PlaneEmbedding> queue{stacked_triangulation(n, 0)};
    seen.insert(canonical_form(queue[0].graph()));
    result.push_back(queue[0]);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        PlaneEmbedding cur = queue[qi];
        for (auto [u, v] : cur.graph().edges()) {
            PlaneEmbedding next;
            try {
                next = flip(cur, u, v);
            } catch (const Error&) {
                continue;
            }
            auto form = canonical_form(next.graph());
            if (seen.insert(form).second) {
                result.push_back(next);
                queue.push_back(next);
            }
        }
    }
    return result;
}

}  // namespace plansat
