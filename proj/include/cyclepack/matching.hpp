#pragma once

// Maximum matching in general simple graphs.
//
// max_matching is Edmonds' blossom algorithm (odd cycles contracted via a
// base[] array, augmenting paths found by BFS). Exactness on non-bipartite
// graphs matters here: the strong-edge graph F can have odd components, and
// alpha'(F) feeds every decision formula. Vertices are scanned in ascending
// id order and adjacency lists are sorted, so the returned matching is
// deterministic for a fixed input.
//
// brute_max_matching is the independent oracle: exhaustive branch and bound
// over edges, refused above 24 edges.

#include <queue>

#include "graph.hpp"

namespace cyclepack {

struct Matching {
    // u < v per edge, sorted lexicographically, pairwise vertex-disjoint
    std::vector<std::pair<Vertex, Vertex>> edges;

    int size() const { return static_cast<int>(edges.size()); }

    VertexSet covered() const {
        VertexSet out;
        for (auto [u, v] : edges) {
            out.push_back(u);
            out.push_back(v);
        }
        return sorted_unique(std::move(out));
    }
};

namespace detail {

class blossom_matcher {
public:
    explicit blossom_matcher(const std::vector<std::vector<int>>& adj)
        : n_(static_cast<int>(adj.size())),
          g_(adj),
          match_(n_, -1),
          parent_(n_, -1),
          base_(n_),
          used_(n_, 0),
          in_blossom_(n_, 0) {}

    const std::vector<int>& run() {
        // greedy seed, ascending scan
        for (int v = 0; v < n_; ++v)
            if (match_[v] == -1)
                for (int u : g_[v])
                    if (match_[u] == -1) {
                        match_[v] = u;
                        match_[u] = v;
                        break;
                    }
        for (int v = 0; v < n_; ++v)
            if (match_[v] == -1) {
                int w = find_path(v);
                if (w != -1) augment(w);
            }
        return match_;
    }

private:
    int lca(int a, int b) {
        std::vector<char> mark(n_, 0);
        for (;;) {
            a = base_[a];
            mark[a] = 1;
            if (match_[a] == -1) break;
            a = parent_[match_[a]];
        }
        for (;;) {
            b = base_[b];
            if (mark[b]) return b;
            b = parent_[match_[b]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base_[v] != b) {
            in_blossom_[base_[v]] = 1;
            in_blossom_[base_[match_[v]]] = 1;
            parent_[v] = child;
            child = match_[v];
            v = parent_[match_[v]];
        }
    }

    int find_path(int root) {
        std::fill(used_.begin(), used_.end(), 0);
        std::fill(parent_.begin(), parent_.end(), -1);
        std::iota(base_.begin(), base_.end(), 0);
        used_[root] = 1;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int to : g_[v]) {
                if (base_[v] == base_[to] || match_[v] == to) continue;
                if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
                    // odd cycle: contract the blossom rooted at the lca
                    int cur = lca(v, to);
                    std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
                    mark_path(v, cur, to);
                    mark_path(to, cur, v);
                    for (int i = 0; i < n_; ++i)
                        if (in_blossom_[base_[i]]) {
                            base_[i] = cur;
                            if (!used_[i]) {
                                used_[i] = 1;
                                q.push(i);
                            }
                        }
                } else if (parent_[to] == -1) {
                    parent_[to] = v;
                    if (match_[to] == -1) return to;
                    used_[match_[to]] = 1;
                    q.push(match_[to]);
                }
            }
        }
        return -1;
    }

    void augment(int v) {
        while (v != -1) {
            int pv = parent_[v];
            int next = match_[pv];
            match_[v] = pv;
            match_[pv] = v;
            v = next;
        }
    }

    int n_;
    const std::vector<std::vector<int>>& g_;
    std::vector<int> match_, parent_, base_;
    std::vector<char> used_, in_blossom_;
};

}  // namespace detail

inline Matching max_matching(const SimpleGraph& g) {
    const VertexSet& verts = g.vertices();
    int m = static_cast<int>(verts.size());
    std::vector<int> compact(g.id_space(), -1);
    for (int i = 0; i < m; ++i) compact[verts[i]] = i;
    std::vector<std::vector<int>> adj(m);
    for (int i = 0; i < m; ++i)
        for (Vertex u : g.neighbors(verts[i])) adj[i].push_back(compact[u]);

    detail::blossom_matcher matcher(adj);
    const std::vector<int>& match = matcher.run();

    Matching out;
    for (int i = 0; i < m; ++i)
        if (match[i] > i) out.edges.emplace_back(verts[i], verts[match[i]]);
    std::sort(out.edges.begin(), out.edges.end());
#ifndef NDEBUG
    std::vector<char> seen(g.id_space(), 0);
    for (auto [u, v] : out.edges) {
        assert(g.adjacent(u, v));
        assert(!seen[u] && !seen[v]);
        seen[u] = seen[v] = 1;
    }
#endif
    return out;
}

namespace detail {

struct brute_matcher {
    const std::vector<std::pair<Vertex, Vertex>>& edges;
    std::vector<char> used;
    std::vector<std::pair<Vertex, Vertex>> current, best;

    void rec(std::size_t i) {
        if (current.size() > best.size()) best = current;
        if (current.size() + (edges.size() - i) <= best.size()) return;  // bound
        for (std::size_t j = i; j < edges.size(); ++j) {
            auto [u, v] = edges[j];
            if (used[u] || used[v]) continue;
            used[u] = used[v] = 1;
            current.push_back(edges[j]);
            rec(j + 1);
            current.pop_back();
            used[u] = used[v] = 0;
        }
    }
};

}  // namespace detail

inline Matching brute_max_matching(const SimpleGraph& g) {
    auto edges = g.edge_list();
    if (edges.size() > 24)
        throw std::invalid_argument("brute_max_matching: " + std::to_string(edges.size()) +
                                    " edges exceeds the 24-edge budget");
    detail::brute_matcher b{edges, std::vector<char>(g.id_space(), 0), {}, {}};
    b.rec(0);
    Matching out{std::move(b.best)};
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

// Perfect matching on the subgraph induced by `active`.
inline bool has_perfect_matching(const SimpleGraph& g, const VertexSet& active) {
    SimpleGraph sub = g.induced(active);
    if (sub.order() % 2 != 0) return false;
    return 2 * max_matching(sub).size() == sub.order();
}

}  // namespace cyclepack
