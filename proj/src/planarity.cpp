#include <algorithm>
#include <map>
#include <set>

#include "plansat/embedding.hpp"

namespace plansat {

namespace {

// Biconnected components as edge partitions (Hopcroft-Tarjan), iterative.
std::vector<std::vector<std::pair<int, int>>> biconnected_blocks(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> disc(n, -1), low(n, 0), parent(n, -1), child_idx(n, 0);
    std::vector<std::pair<int, int>> estack;
    std::vector<std::vector<std::pair<int, int>>> blocks;
    int timer = 0;

    for (int s = 0; s < n; ++s) {
        if (disc[s] != -1 || g.degree(s) == 0) continue;
        std::vector<int> vstack{s};
        disc[s] = low[s] = timer++;
        while (!vstack.empty()) {
            int u = vstack.back();
            if (child_idx[u] < g.degree(u)) {
                int v = g.neighbors(u)[child_idx[u]++];
                if (disc[v] == -1) {
                    estack.emplace_back(u, v);
                    parent[v] = u;
                    disc[v] = low[v] = timer++;
                    vstack.push_back(v);
                } else if (v != parent[u] && disc[v] < disc[u]) {
                    estack.emplace_back(u, v);
                    low[u] = std::min(low[u], disc[v]);
                }
            } else {
                vstack.pop_back();
                if (!vstack.empty()) {
                    int p = vstack.back();
                    low[p] = std::min(low[p], low[u]);
                    if (low[u] >= disc[p]) {
                        std::vector<std::pair<int, int>> block;
                        while (!estack.empty()) {
                            auto e = estack.back();
                            estack.pop_back();
                            block.push_back(e);
                            if (e == std::make_pair(p, u)) break;
                        }
                        blocks.push_back(std::move(block));
                    }
                }
            }
        }
    }
    // Deterministic order: by least vertex, then lexicographic edge list.
    for (auto& b : blocks) {
        for (auto& [u, v] : b)
            if (u > v) std::swap(u, v);
        std::sort(b.begin(), b.end());
    }
    std::sort(blocks.begin(), blocks.end());
    return blocks;
}

struct HFace {
    std::vector<DirEdge> walk;
    std::set<int> boundary;
};

std::vector<HFace> h_faces(int n, const std::set<std::pair<int, int>>& h_edges,
                           const std::vector<std::vector<int>>& rot_full) {
    std::vector<std::pair<int, int>> edge_list(h_edges.begin(), h_edges.end());
    Graph h(n, edge_list);
    // Restrict rotations to the embedded edges of this block; at cut
    // vertices the full rotation already holds other blocks' neighbors.
    std::vector<std::vector<int>> rot(n);
    for (int v = 0; v < n; ++v)
        for (int w : rot_full[v])
            if (h_edges.count({std::min(v, w), std::max(v, w)})) rot[v].push_back(w);
    auto walks = trace_walks(h, rot);
    std::vector<HFace> out;
    for (auto& w : walks) {
        HFace f;
        f.walk = std::move(w);
        for (const DirEdge& d : f.walk) f.boundary.insert(d.from);
        out.push_back(std::move(f));
    }
    return out;
}

int index_of(const std::vector<int>& rotation, int neighbor) {
    for (std::size_t i = 0; i < rotation.size(); ++i)
        if (rotation[i] == neighbor) return static_cast<int>(i);
    return -1;
}

// Splice w into rot[t] at t's first corner on the face walk.
void splice(std::vector<std::vector<int>>& rot, const HFace& f, int t, int w) {
    for (const DirEdge& d : f.walk)
        if (d.to == t) {
            rot[t].insert(rot[t].begin() + index_of(rot[t], d.from), w);
            return;
        }
}

struct Fragment {
    std::vector<int> attachments;  // sorted H-vertices
    std::vector<int> interior;     // sorted, empty for a chord
    std::pair<int, int> chord{-1, -1};
};

// Demoucron-style path addition on one biconnected block. Fills rotations
// for the block's vertices; returns false when the block is non-planar.
bool embed_block(const Graph& g, const std::vector<std::pair<int, int>>& block_edges,
                 std::vector<std::vector<int>>& rot) {
    int n = g.vertex_count();
    if (block_edges.size() == 1) {
        auto [u, v] = block_edges[0];
        rot[u].push_back(v);
        rot[v].push_back(u);
        return true;
    }
    std::map<int, std::vector<int>> adj;
    for (auto [u, v] : block_edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (auto& [v, nb] : adj) std::sort(nb.begin(), nb.end());

    // Initial cycle by DFS from the least block vertex, neighbors ascending.
    int start = adj.begin()->first;
    std::map<int, int> par;
    std::vector<int> cycle;
    {
        std::vector<int> stack{start};
        par[start] = -1;
        std::set<int> visited{start};
        std::map<int, std::size_t> next_nbr;
        while (!stack.empty() && cycle.empty()) {
            int u = stack.back();
            auto& nb = adj[u];
            bool advanced = false;
            for (std::size_t& i = next_nbr[u]; i < nb.size();) {
                int v = nb[i++];
                if (v == par[u]) continue;
                if (visited.count(v)) {
                    // Back edge u -> v closes a cycle through the DFS path.
                    cycle.push_back(u);
                    for (int w = u; w != v;) {
                        w = par[w];
                        cycle.push_back(w);
                    }
                    advanced = true;
                    break;
                }
                visited.insert(v);
                par[v] = u;
                stack.push_back(v);
                advanced = true;
                break;
            }
            if (!advanced) stack.pop_back();
        }
    }
    if (cycle.empty()) return false;  // no cycle in a 2-edge-connected block: impossible

    std::set<int> in_h(cycle.begin(), cycle.end());
    std::set<std::pair<int, int>> h_edges;
    int L = static_cast<int>(cycle.size());
    for (int i = 0; i < L; ++i) {
        int u = cycle[i], v = cycle[(i + 1) % L];
        h_edges.insert({std::min(u, v), std::max(u, v)});
        rot[u].push_back(v);
        rot[v].push_back(u);
    }

    std::set<std::pair<int, int>> all_edges(block_edges.begin(), block_edges.end());

    while (h_edges.size() < all_edges.size()) {
        // Fragments relative to H.
        std::vector<Fragment> fragments;
        for (auto [u, v] : all_edges)
            if (!h_edges.count({u, v}) && in_h.count(u) && in_h.count(v)) {
                Fragment fr;
                fr.attachments = {u, v};
                fr.chord = {u, v};
                fragments.push_back(std::move(fr));
            }
        std::set<int> seen;
        for (auto& [v0, nb0] : adj) {
            if (in_h.count(v0) || seen.count(v0)) continue;
            Fragment fr;
            std::set<int> comp, attach;
            std::vector<int> stack{v0};
            comp.insert(v0);
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                for (int w : adj[u]) {
                    if (in_h.count(w))
                        attach.insert(w);
                    else if (comp.insert(w).second)
                        stack.push_back(w);
                }
            }
            seen.insert(comp.begin(), comp.end());
            fr.interior.assign(comp.begin(), comp.end());
            fr.attachments.assign(attach.begin(), attach.end());
            fragments.push_back(std::move(fr));
        }

        auto faces = h_faces(n, h_edges, rot);

        int best_frag = -1, best_count = -1, best_face = -1;
        for (std::size_t fi = 0; fi < fragments.size(); ++fi) {
            int count = 0, first_face = -1;
            for (std::size_t k = 0; k < faces.size(); ++k) {
                bool ok = true;
                for (int a : fragments[fi].attachments)
                    if (!faces[k].boundary.count(a)) {
                        ok = false;
                        break;
                    }
                if (ok) {
                    ++count;
                    if (first_face < 0) first_face = static_cast<int>(k);
                }
            }
            if (count == 0) return false;  // fragment with no admissible face
            if (best_frag < 0 || count < best_count) {
                best_frag = static_cast<int>(fi);
                best_count = count;
                best_face = first_face;
            }
        }

        const Fragment& fr = fragments[best_frag];
        const HFace& face = faces[best_face];

        std::vector<int> path;
        if (fr.chord.first >= 0) {
            path = {fr.chord.first, fr.chord.second};
        } else {
            // Path between the two least attachments through the interior.
            int a1 = fr.attachments[0], a2 = fr.attachments[1];
            std::set<int> interior(fr.interior.begin(), fr.interior.end());
            std::map<int, int> prev;
            std::vector<int> queue;
            for (int w : adj[a1])
                if (interior.count(w) && !prev.count(w)) {
                    prev[w] = a1;
                    queue.push_back(w);
                }
            int hit = -1;
            for (std::size_t qi = 0; qi < queue.size() && hit < 0; ++qi) {
                int u = queue[qi];
                if (std::binary_search(adj[a2].begin(), adj[a2].end(), u)) {
                    hit = u;
                    break;
                }
                for (int w : adj[u])
                    if (interior.count(w) && !prev.count(w)) {
                        prev[w] = u;
                        queue.push_back(w);
                    }
            }
            if (hit < 0) return false;  // disconnected fragment: malformed block
            std::vector<int> mid;
            for (int w = hit; w != a1; w = prev[w]) mid.push_back(w);
            std::reverse(mid.begin(), mid.end());
            path.push_back(a1);
            for (int w : mid) path.push_back(w);
            path.push_back(a2);
        }

        // Embed the path through the chosen face.
        int a = path.front(), b = path.back();
        splice(rot, face, a, path[1]);
        splice(rot, face, b, path[path.size() - 2]);
        for (std::size_t i = 1; i + 1 < path.size(); ++i) {
            int p = path[i - 1], q = path[i + 1];
            rot[path[i]] = {p, q};
            in_h.insert(path[i]);
        }
        for (std::size_t i = 0; i + 1 < path.size(); ++i) {
            int u = path[i], v = path[i + 1];
            h_edges.insert({std::min(u, v), std::max(u, v)});
        }
    }
    return true;
}

}  // namespace

std::optional<PlaneEmbedding> planar_embed(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::vector<int>> rot(n);

    auto blocks = biconnected_blocks(g);
    for (const auto& block : blocks)
        if (!embed_block(g, block, rot)) return std::nullopt;

    std::vector<int> comp = g.component_of();
    std::set<int> reps(comp.begin(), comp.end());
    std::map<int, Anchor> anchors;
    if (g.edge_count() == 0) {
        for (int r : reps) anchors[r] = Anchor::root();
    } else {
        int base = -1;
        for (int v = 0; v < n && base < 0; ++v)
            if (g.degree(v) > 0) base = comp[v];
        DirEdge base_edge{-1, -1};
        for (int v = 0; v < n && base_edge.from < 0; ++v)
            if (comp[v] == base && g.degree(v) > 0) base_edge = {v, g.neighbors(v)[0]};
        for (int r : reps)
            anchors[r] = (r == base) ? Anchor::root() : Anchor::at(base_edge.from, base_edge.to);
    }
    return PlaneEmbedding::create(g, std::move(rot), std::move(anchors));
}

}  // namespace plansat
