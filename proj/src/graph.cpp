#include "plansat/graph.hpp"

#include <algorithm>
#include <bit>
#include <tuple>
#include <numeric>

namespace plansat {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edge_list) : n_(n) {
    if (n < 0) throw Error(ErrorCode::BadParameter, "negative vertex count");
    adj_.assign(n, {});
    for (auto [u, v] : edge_list) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw Error(ErrorCode::BadParameter, "edge endpoint out of range");
        if (u == v) throw Error(ErrorCode::BadParameter, "loop edge");
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (int v = 0; v < n; ++v) {
        auto& nb = adj_[v];
        std::sort(nb.begin(), nb.end());
        if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
            throw Error(ErrorCode::BadParameter, "parallel edge");
        m_ += static_cast<int>(nb.size());
    }
    m_ /= 2;
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph Graph::with_edge(int u, int v) const {
    auto e = edges();
    e.emplace_back(std::min(u, v), std::max(u, v));
    return Graph(n_, e);
}

Graph Graph::without_edges(const std::vector<std::pair<int, int>>& removed) const {
    std::vector<std::pair<int, int>> kept;
    for (auto [u, v] : edges()) {
        bool drop = false;
        for (auto [a, b] : removed) {
            int lo = std::min(a, b), hi = std::max(a, b);
            if (lo == u && hi == v) {
                drop = true;
                break;
            }
        }
        if (!drop) kept.emplace_back(u, v);
    }
    return Graph(n_, kept);
}

std::vector<int> Graph::component_of() const {
    std::vector<int> rep(n_, -1);
    for (int s = 0; s < n_; ++s) {
        if (rep[s] != -1) continue;
        std::vector<int> stack{s};
        rep[s] = s;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj_[v])
                if (rep[w] == -1) {
                    rep[w] = s;
                    stack.push_back(w);
                }
        }
    }
    return rep;
}

DegreeProfile degree_profile(const Graph& g) {
    DegreeProfile p;
    int n = g.vertex_count();
    p.degrees.resize(n);
    p.d3_neighbors.assign(n, 0);
    for (int v = 0; v < n; ++v) p.degrees[v] = g.degree(v);
    p.sorted_degrees = p.degrees;
    std::sort(p.sorted_degrees.begin(), p.sorted_degrees.end());
    for (int v = 0; v < n; ++v) {
        if (p.degrees[v] == 3) ++p.n3;
        for (int w : g.neighbors(v))
            if (p.degrees[w] == 3) ++p.d3_neighbors[v];
    }
    return p;
}

bool Monomorphism::verify(const Graph& h, const Graph& g) const {
    if (static_cast<int>(map.size()) != h.vertex_count()) return false;
    std::vector<char> used(g.vertex_count(), 0);
    for (int img : map) {
        if (img < 0 || img >= g.vertex_count() || used[img]) return false;
        used[img] = 1;
    }
    for (auto [u, v] : h.edges())
        if (!g.has_edge(map[u], map[v])) return false;
    return true;
}

namespace {

// Fixed-width bitset over g's vertices.
struct Bits {
    std::vector<std::uint64_t> w;

    explicit Bits(int n) : w((n + 63) / 64, 0) {}

    void set(int i) { w[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
    void reset(int i) { w[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }

    void and_with(const Bits& o) {
        for (std::size_t k = 0; k < w.size(); ++k) w[k] &= o.w[k];
    }
    void and_not(const Bits& o) {
        for (std::size_t k = 0; k < w.size(); ++k) w[k] &= ~o.w[k];
    }
    int count() const {
        int c = 0;
        for (auto x : w) c += std::popcount(x);
        return c;
    }
    bool empty() const {
        for (auto x : w)
            if (x) return false;
        return true;
    }
    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t k = 0; k < w.size(); ++k) {
            std::uint64_t x = w[k];
            while (x) {
                int b = std::countr_zero(x);
                f(static_cast<int>(k * 64 + b));
                x &= x - 1;
            }
        }
    }
};

// Does the sorted-descending degree list `small` fit under `big` pointwise?
bool degree_multiset_dominates(const std::vector<int>& small, const std::vector<int>& big) {
    if (small.size() > big.size()) return false;
    for (std::size_t i = 0; i < small.size(); ++i)
        if (small[i] > big[i]) return false;
    return true;
}

struct MonoSearcher {
    const Graph& h;
    const Graph& g;
    int n;
    std::vector<Bits> g_adj;         // adjacency rows of g
    std::vector<Bits> domain;        // initial candidates per h-vertex
    std::vector<int> order;          // non-isolated h-vertices, degree-descending
    std::vector<int> assign;         // h-vertex -> g-vertex or -1
    Bits used;

    MonoSearcher(const Graph& h_, const Graph& g_)
        : h(h_), g(g_), n(g_.vertex_count()), used(n) {
        g_adj.assign(n, Bits(n));
        for (int v = 0; v < n; ++v)
            for (int w : g.neighbors(v)) g_adj[v].set(w);

        std::vector<std::vector<int>> h_nbd(n), g_nbd(n);
        for (int v = 0; v < n; ++v) {
            for (int w : h.neighbors(v)) h_nbd[v].push_back(h.degree(w));
            for (int w : g.neighbors(v)) g_nbd[v].push_back(g.degree(w));
            std::sort(h_nbd[v].rbegin(), h_nbd[v].rend());
            std::sort(g_nbd[v].rbegin(), g_nbd[v].rend());
        }
        domain.assign(n, Bits(n));
        for (int v = 0; v < n; ++v) {
            if (h.degree(v) == 0) continue;
            for (int c = 0; c < n; ++c)
                if (h.degree(v) <= g.degree(c) && degree_multiset_dominates(h_nbd[v], g_nbd[c]))
                    domain[v].set(c);
        }
        for (int v = 0; v < n; ++v)
            if (h.degree(v) > 0) order.push_back(v);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            if (h.degree(a) != h.degree(b)) return h.degree(a) > h.degree(b);
            return a < b;
        });
        assign.assign(n, -1);
    }

    // Candidates for v consistent with current assignment.
    Bits candidates(int v) const {
        Bits c = domain[v];
        c.and_not(used);
        for (int w : h.neighbors(v))
            if (assign[w] != -1) c.and_with(g_adj[assign[w]]);
        return c;
    }

    // Most-constrained-first with deferral: vertices whose neighbors are all
    // matched only interact through injectivity, so they go last; among the
    // rest the smallest candidate set wins, matched-adjacent breaking ties.
    // An empty candidate set anywhere fails immediately.
    int pick(int& best_count, Bits& best_cand) const {
        int best = -1;
        bool best_active = false, best_connected = false;
        for (int v : order) {
            if (assign[v] != -1) continue;
            bool connected = false, active = false;
            for (int w : h.neighbors(v)) {
                if (assign[w] != -1)
                    connected = true;
                else
                    active = true;
            }
            Bits c = candidates(v);
            int cnt = c.count();
            if (cnt == 0) {
                best_count = 0;
                return v;
            }
            bool better = best == -1 ||
                          std::make_tuple(!active, cnt, !connected) <
                              std::make_tuple(!best_active, best_count, !best_connected);
            if (better) {
                best = v;
                best_count = cnt;
                best_cand = c;
                best_active = active;
                best_connected = connected;
            }
        }
        return best;
    }

    bool solve(int matched, int total) {
        if (matched == total) return true;
        int cnt = 0;
        Bits cand(n);
        int v = pick(cnt, cand);
        if (cnt == 0) return false;
        bool found = false;
        cand.for_each([&](int c) {
            if (found) return;
            assign[v] = c;
            used.set(c);
            if (solve(matched + 1, total)) {
                found = true;
                return;
            }
            used.reset(c);
            assign[v] = -1;
        });
        return found;
    }
};

}  // namespace

std::optional<Monomorphism> monomorphism_search(const Graph& h, const Graph& g) {
    if (h.vertex_count() != g.vertex_count())
        throw Error(ErrorCode::VertexCountMismatch,
                    "spanning convention requires equal vertex counts");
    int n = h.vertex_count();
    if (n == 0) return Monomorphism{};

    // Global degree-multiset dominance is a cheap necessary condition.
    auto hd = degree_profile(h).sorted_degrees;
    auto gd = degree_profile(g).sorted_degrees;
    for (int i = 0; i < n; ++i)
        if (hd[n - 1 - i] > gd[n - 1 - i]) return std::nullopt;

    MonoSearcher searcher(h, g);
    int total = static_cast<int>(searcher.order.size());
    if (!searcher.solve(0, total)) return std::nullopt;

    // Isolated h-vertices take the leftover g-vertices in index order.
    Monomorphism mono;
    mono.map = searcher.assign;
    std::vector<int> free;
    for (int c = 0; c < n; ++c)
        if (!searcher.used.test(c)) free.push_back(c);
    std::size_t next = 0;
    for (int v = 0; v < n; ++v)
        if (mono.map[v] == -1) mono.map[v] = free[next++];
    return mono;
}

}  // namespace plansat
