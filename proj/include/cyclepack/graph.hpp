#pragma once

// Core graph values: Multigraph (loops + edge multiplicities) and SimpleGraph
// (an adjacency-only view that keeps the original vertex id space and an
// explicit active-vertex set, so derived graphs map back to the original ids
// without relabeling).

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cyclepack {

using Vertex = int;

// Sorted, duplicate-free vertex lists double as sets throughout.
using VertexSet = std::vector<Vertex>;

inline VertexSet sorted_unique(VertexSet v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

inline bool vset_contains(const VertexSet& s, Vertex v) {
    return std::binary_search(s.begin(), s.end(), v);
}

inline VertexSet vset_minus(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline VertexSet vset_union(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline VertexSet vset_intersect(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline bool vset_disjoint(const VertexSet& a, const VertexSet& b) {
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j)
            ++i;
        else if (*j < *i)
            ++j;
        else
            return false;
    }
    return true;
}

// Undirected multigraph on a dense 0..n-1 id space. Loops and parallel edges
// are stored as counts; values are treated as immutable once built (all
// algorithms take const references and never mutate).
class Multigraph {
public:
    Multigraph() = default;
    explicit Multigraph(int n) : loops_(n, 0), adj_(n) {
        if (n < 0) throw std::invalid_argument("Multigraph: negative vertex count");
    }

    int vertex_count() const { return static_cast<int>(adj_.size()); }

    void add_edge(Vertex u, Vertex v, int multiplicity = 1) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("Multigraph::add_edge: use add_loop for u == v");
        if (multiplicity <= 0) throw std::invalid_argument("Multigraph::add_edge: nonpositive multiplicity");
        adj_[u][v] += multiplicity;
        adj_[v][u] += multiplicity;
    }

    void add_loop(Vertex v, int count = 1) {
        check_vertex(v);
        if (count <= 0) throw std::invalid_argument("Multigraph::add_loop: nonpositive count");
        loops_[v] += count;
    }

    int multiplicity(Vertex u, Vertex v) const {
        check_vertex(u);
        check_vertex(v);
        if (u == v) return 0;
        auto it = adj_[u].find(v);
        return it == adj_[u].end() ? 0 : it->second;
    }

    int loop_count(Vertex v) const {
        check_vertex(v);
        return loops_[v];
    }

    bool has_loops() const {
        return std::any_of(loops_.begin(), loops_.end(), [](int c) { return c > 0; });
    }

    // Distinct neighbors of v; loops never count.
    int simple_degree(Vertex v) const {
        check_vertex(v);
        return static_cast<int>(adj_[v].size());
    }

    // neighbor -> multiplicity, ordered by neighbor id
    const std::map<Vertex, int>& neighbors(Vertex v) const {
        check_vertex(v);
        return adj_[v];
    }

    // (u, v, multiplicity) with u < v, sorted lexicographically
    std::vector<std::tuple<Vertex, Vertex, int>> edges() const {
        std::vector<std::tuple<Vertex, Vertex, int>> out;
        for (Vertex u = 0; u < vertex_count(); ++u)
            for (const auto& [v, m] : adj_[u])
                if (u < v) out.emplace_back(u, v, m);
        return out;
    }

    friend bool operator==(const Multigraph& a, const Multigraph& b) {
        return a.loops_ == b.loops_ && a.adj_ == b.adj_;
    }

private:
    void check_vertex(Vertex v) const {
        if (v < 0 || v >= vertex_count())
            throw std::out_of_range("Multigraph: vertex " + std::to_string(v) + " out of range [0," +
                                    std::to_string(vertex_count()) + ")");
    }

    std::vector<int> loops_;                  // v -> loop count
    std::vector<std::map<Vertex, int>> adj_;  // v -> (neighbor -> multiplicity), symmetric
};

// Simple graph on the same id space as the multigraph it was derived from.
// Inactive vertices have no incident edges; order() counts active vertices
// only. Edge queries between inactive vertices answer false.
class SimpleGraph {
public:
    SimpleGraph() = default;

    explicit SimpleGraph(int n) : n_(n), active_(n, 1), adj_(n) {
        if (n < 0) throw std::invalid_argument("SimpleGraph: negative vertex count");
        verts_.resize(n);
        std::iota(verts_.begin(), verts_.end(), 0);
    }

    SimpleGraph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) : SimpleGraph(n) {
        for (auto [u, v] : edges) add_edge_unchecked(u, v);
        finish();
    }

    SimpleGraph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges, VertexSet active)
        : n_(n), active_(n, 0), adj_(n) {
        if (n < 0) throw std::invalid_argument("SimpleGraph: negative vertex count");
        verts_ = sorted_unique(std::move(active));
        if (!verts_.empty() && (verts_.front() < 0 || verts_.back() >= n))
            throw std::out_of_range("SimpleGraph: active vertex out of range");
        for (Vertex v : verts_) active_[v] = 1;
        for (auto [u, v] : edges)
            if (is_active(u) && is_active(v)) add_edge_unchecked(u, v);
        finish();
    }

    int id_space() const { return n_; }
    int order() const { return static_cast<int>(verts_.size()); }
    const VertexSet& vertices() const { return verts_; }

    bool is_active(Vertex v) const { return v >= 0 && v < n_ && active_[v]; }

    bool adjacent(Vertex u, Vertex v) const {
        if (!is_active(u) || !is_active(v) || u == v) return false;
        return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
    }

    const std::vector<Vertex>& neighbors(Vertex v) const {
        check_vertex(v);
        return adj_[v];
    }

    int degree(Vertex v) const {
        check_vertex(v);
        return static_cast<int>(adj_[v].size());
    }

    int min_degree() const {
        int d = order() == 0 ? 0 : degree(verts_.front());
        for (Vertex v : verts_) d = std::min(d, degree(v));
        return d;
    }

    int edge_count() const {
        int total = 0;
        for (Vertex v : verts_) total += degree(v);
        return total / 2;
    }

    std::vector<std::pair<Vertex, Vertex>> edge_list() const {
        std::vector<std::pair<Vertex, Vertex>> out;
        for (Vertex u : verts_)
            for (Vertex v : adj_[u])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    // Active vertices with at least one incident edge.
    VertexSet support() const {
        VertexSet out;
        for (Vertex v : verts_)
            if (degree(v) > 0) out.push_back(v);
        return out;
    }

    // Restriction to keep (intersected with the current active set); ids are
    // never renumbered.
    SimpleGraph induced(const VertexSet& keep) const {
        return SimpleGraph(n_, edge_list(), vset_intersect(verts_, keep));
    }

    SimpleGraph without(const VertexSet& drop) const { return induced(vset_minus(verts_, drop)); }

    friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
        return a.n_ == b.n_ && a.verts_ == b.verts_ && a.adj_ == b.adj_;
    }

private:
    void check_vertex(Vertex v) const {
        if (v < 0 || v >= n_)
            throw std::out_of_range("SimpleGraph: vertex " + std::to_string(v) + " out of range [0," +
                                    std::to_string(n_) + ")");
    }

    void add_edge_unchecked(Vertex u, Vertex v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("SimpleGraph: loop rejected");
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }

    void finish() {
        for (auto& nbrs : adj_) {
            std::sort(nbrs.begin(), nbrs.end());
            nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        }
    }

    int n_ = 0;
    std::vector<char> active_;
    VertexSet verts_;
    std::vector<std::vector<Vertex>> adj_;
};

// V1(G): vertices incident to at least one loop.
inline VertexSet loop_vertices(const Multigraph& g) {
    VertexSet out;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.loop_count(v) > 0) out.push_back(v);
    return out;
}

// Underlying simple graph: adjacency without multiplicities, loops dropped.
inline SimpleGraph underlying_simple(const Multigraph& g) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (auto [u, v, m] : g.edges()) edges.emplace_back(u, v);
    return SimpleGraph(g.vertex_count(), edges);
}

// F(G): the simple graph formed by the multiple edges of G - V1. Its active
// set is exactly the vertices covered by a strong edge, so order() is the
// |F| the decision conditions consume.
inline SimpleGraph strong_edge_graph(const Multigraph& g) {
    VertexSet v1 = loop_vertices(g);
    std::vector<std::pair<Vertex, Vertex>> edges;
    VertexSet covered;
    for (auto [u, v, m] : g.edges())
        if (m >= 2 && !vset_contains(v1, u) && !vset_contains(v1, v)) {
            edges.emplace_back(u, v);
            covered.push_back(u);
            covered.push_back(v);
        }
    return SimpleGraph(g.vertex_count(), edges, sorted_unique(std::move(covered)));
}

inline int simple_degree(const Multigraph& g, Vertex v) { return g.simple_degree(v); }

inline int min_simple_degree(const Multigraph& g) {
    int best = g.vertex_count() == 0 ? 0 : g.simple_degree(0);
    for (Vertex v = 1; v < g.vertex_count(); ++v) best = std::min(best, g.simple_degree(v));
    return best;
}

// G is in D_k when every vertex has at least 2k-1 distinct neighbors.
inline bool in_Dk(const Multigraph& g, int k) {
    if (k < 1) throw std::invalid_argument("in_Dk: k must be positive");
    if (g.vertex_count() == 0) return false;
    return min_simple_degree(g) >= 2 * k - 1;
}

}  // namespace cyclepack
