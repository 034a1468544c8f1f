#pragma once

// Structural recognizers for the named families and substructures the
// decision conditions test: cycles, wheels (simple and with strong spokes),
// Y_{h,t}, big sets, extremality, superstars, and the two k=2 family lists
// used as cross-checks.

#include <optional>
#include <set>

#include "graph.hpp"
#include "matching.hpp"

namespace cyclepack {

// --------------------------------------------------------------------------
// cycles and wheels

// True iff the subgraph induced by `active` is a single cycle on >= 3
// vertices: connected with every degree exactly 2.
inline bool is_cycle(const SimpleGraph& g, const VertexSet& active) {
    SimpleGraph sub = g.induced(active);
    int n = sub.order();
    if (n < 3) return false;
    for (Vertex v : sub.vertices())
        if (sub.degree(v) != 2) return false;
    // connectivity walk
    std::vector<Vertex> stack{sub.vertices().front()};
    std::vector<char> mark(sub.id_space(), 0);
    mark[stack[0]] = 1;
    int count = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex u : sub.neighbors(v))
            if (!mark[u]) {
                mark[u] = 1;
                ++count;
                stack.push_back(u);
            }
    }
    return count == n;
}

// Least vertex adjacent to all other active vertices whose removal leaves a
// cycle; requires rim length >= 3 (so K4 counts, hub = least id).
inline std::optional<Vertex> wheel_hub(const SimpleGraph& g) {
    int n = g.order();
    if (n < 4) return std::nullopt;
    for (Vertex v : g.vertices()) {
        if (g.degree(v) != n - 1) continue;
        if (is_cycle(g, vset_minus(g.vertices(), {v}))) return v;
    }
    return std::nullopt;
}

// Multigraph wheel: the underlying graph is a wheel with this hub and every
// strong pair is a spoke (incident to the hub). Loops disqualify.
inline std::optional<Vertex> wheel_hub(const Multigraph& g) {
    if (g.has_loops()) return std::nullopt;
    SimpleGraph u = underlying_simple(g);
    int n = u.order();
    if (n < 4) return std::nullopt;
    for (Vertex v : u.vertices()) {
        if (u.degree(v) != n - 1) continue;
        if (!is_cycle(u, vset_minus(u.vertices(), {v}))) continue;
        bool spokes_only = true;
        for (auto [a, b, m] : g.edges())
            if (m >= 2 && a != v && b != v) {
                spokes_only = false;
                break;
            }
        if (spokes_only) return v;
    }
    return std::nullopt;
}

// --------------------------------------------------------------------------
// Y_{h,t} = complement(K_h) joined to (K_t + K_t)

struct YWitness {
    VertexSet x0;  // independent, size h, joined to everything else
    VertexSet x1;  // clique, size t
    VertexSet x2;  // clique, size t, no edges to x1
};

// Checks the defining predicate of Y_{h,t} directly against g.
inline bool y_witness_valid(const SimpleGraph& g, const YWitness& w, int h, int t) {
    if (static_cast<int>(w.x0.size()) != h || static_cast<int>(w.x1.size()) != t ||
        static_cast<int>(w.x2.size()) != t)
        return false;
    VertexSet all = vset_union(w.x0, vset_union(w.x1, w.x2));
    if (all != g.vertices()) return false;
    for (std::size_t i = 0; i < w.x0.size(); ++i)
        for (std::size_t j = i + 1; j < w.x0.size(); ++j)
            if (g.adjacent(w.x0[i], w.x0[j])) return false;
    for (const VertexSet* clique : {&w.x1, &w.x2})
        for (std::size_t i = 0; i < clique->size(); ++i)
            for (std::size_t j = i + 1; j < clique->size(); ++j)
                if (!g.adjacent((*clique)[i], (*clique)[j])) return false;
    for (Vertex a : w.x0)
        for (Vertex b : vset_union(w.x1, w.x2))
            if (!g.adjacent(a, b)) return false;
    for (Vertex a : w.x1)
        for (Vertex b : w.x2)
            if (g.adjacent(a, b)) return false;
    return true;
}

namespace detail {

// adjacency of the complement restricted to the active set
inline std::vector<VertexSet> complement_components(const SimpleGraph& g) {
    const VertexSet& verts = g.vertices();
    std::vector<char> seen(g.id_space(), 0);
    std::vector<VertexSet> comps;
    for (Vertex start : verts) {
        if (seen[start]) continue;
        VertexSet comp;
        std::vector<Vertex> stack{start};
        seen[start] = 1;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (Vertex u : verts)
                if (u != v && !seen[u] && !g.adjacent(u, v)) {
                    seen[u] = 1;
                    stack.push_back(u);
                }
        }
        comps.push_back(sorted_unique(std::move(comp)));
    }
    return comps;
}

inline bool is_independent(const SimpleGraph& g, const VertexSet& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (g.adjacent(s[i], s[j])) return false;
    return true;
}

inline bool is_clique(const SimpleGraph& g, const VertexSet& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (!g.adjacent(s[i], s[j])) return false;
    return true;
}

// If the complement restricted to comp is K_{t,t}, returns the bipartition
// (part containing the least vertex first). In the complement, X1 and X2 are
// the sides: no complement edges inside a side, all across.
inline std::optional<std::pair<VertexSet, VertexSet>> split_cobipartite(const SimpleGraph& g,
                                                                        const VertexSet& comp, int t) {
    if (static_cast<int>(comp.size()) != 2 * t) return std::nullopt;
    // 2-color by complement adjacency
    std::map<Vertex, int> color;
    std::vector<Vertex> stack{comp.front()};
    color[comp.front()] = 0;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex u : comp)
            if (u != v && !g.adjacent(u, v)) {  // complement edge
                auto it = color.find(u);
                if (it == color.end()) {
                    color[u] = color[v] ^ 1;
                    stack.push_back(u);
                } else if (it->second == color[v]) {
                    return std::nullopt;  // odd complement cycle
                }
            }
    }
    if (color.size() != comp.size()) return std::nullopt;  // complement disconnected inside comp
    VertexSet a, b;
    for (Vertex v : comp) (color[v] == 0 ? a : b).push_back(v);
    if (static_cast<int>(a.size()) != t || static_cast<int>(b.size()) != t) return std::nullopt;
    // complete across in the complement <=> no original edges across
    for (Vertex u : a)
        for (Vertex v : b)
            if (g.adjacent(u, v)) return std::nullopt;
    // sides must be cliques in the original
    if (!is_clique(g, a) || !is_clique(g, b)) return std::nullopt;
    return std::make_pair(std::move(a), std::move(b));
}

}  // namespace detail

// All Y_{h,t} decompositions of g (distinct X0 choices). Recognition goes
// through the complement, which must be K_h + K_{t,t}; both role assignments
// are tried, which settles the t=1 ambiguity where K_{1,1} is also a clique.
inline std::vector<YWitness> y_witnesses(const SimpleGraph& g, int h, int t) {
    std::vector<YWitness> out;
    if (h < 0 || t < 1) return out;
    if (g.order() != h + 2 * t) return out;
    auto comps = detail::complement_components(g);

    auto try_roles = [&](const VertexSet& x0_cand, const VertexSet& rest) {
        if (static_cast<int>(x0_cand.size()) != h) return;
        if (!detail::is_independent(g, x0_cand)) return;
        // X0 joined to everything else in g <=> x0_cand isolated from rest in
        // the complement; component structure already guarantees that.
        auto parts = detail::split_cobipartite(g, rest, t);
        if (!parts) return;
        out.push_back(YWitness{x0_cand, parts->first, parts->second});
    };

    if (h == 0) {
        if (comps.size() == 1) try_roles({}, comps[0]);
    } else if (comps.size() == 2) {
        try_roles(comps[0], comps[1]);
        try_roles(comps[1], comps[0]);
    }
#ifndef NDEBUG
    for (const YWitness& w : out) assert(y_witness_valid(g, w, h, t));
#endif
    return out;
}

inline std::optional<YWitness> y_witness(const SimpleGraph& g, int h, int t) {
    auto all = y_witnesses(g, h, t);
    if (all.empty()) return std::nullopt;
    return all.front();
}

// --------------------------------------------------------------------------
// big sets and extremality

using BigSet = VertexSet;

namespace detail {

// Shared by the multigraph and simple-graph entry points. Every independent
// set of size n-2k+1 is the complement of N(v) for a vertex of degree
// exactly 2k-1, so scanning those candidates is complete. Independence of a
// candidate is tested by one pass over the edge list, which keeps the whole
// scan at O(n m) even when the candidate sets are large.
inline std::vector<BigSet> big_sets_impl(const SimpleGraph& g, int k) {
    std::vector<BigSet> out;
    int n = g.order();
    int target = n - 2 * k + 1;
    if (target < 1) return out;
    auto edges = g.edge_list();
    std::vector<char> excluded(g.id_space(), 0);
    std::set<BigSet> seen;
    for (Vertex v : g.vertices()) {
        if (g.degree(v) != 2 * k - 1) continue;
        for (Vertex u : g.neighbors(v)) excluded[u] = 1;
        bool independent = true;
        for (auto [a, b] : edges)
            if (!excluded[a] && !excluded[b]) {
                independent = false;
                break;
            }
        if (independent) {
            VertexSet cand = vset_minus(g.vertices(), g.neighbors(v));
            if (static_cast<int>(cand.size()) == target && seen.insert(cand).second)
                out.push_back(std::move(cand));
        }
        for (Vertex u : g.neighbors(v)) excluded[u] = 0;
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace detail

inline std::vector<BigSet> big_sets(const Multigraph& g, int k) {
    return detail::big_sets_impl(underlying_simple(g), k);
}

inline std::vector<BigSet> big_sets(const SimpleGraph& g, int k) { return detail::big_sets_impl(g, k); }

inline bool is_extremal(const Multigraph& g, int k) { return !big_sets(g, k).empty(); }

// --------------------------------------------------------------------------
// superstars

struct Superstar {
    Vertex center = -1;
    VertexSet leaves;  // F-neighborhood of each leaf is exactly {center}
};

// For a candidate center c the leaf set is forced: it must be all of
// P(c) = { u : N_F(u) = {c} }, because any leaf left outside S would be
// isolated in F - S and kill the perfect matching.
inline std::vector<Superstar> superstars(const SimpleGraph& f) {
    std::vector<Superstar> out;
    for (Vertex c : f.vertices()) {
        VertexSet leaves;
        for (Vertex u : f.vertices())
            if (u != c && f.degree(u) == 1 && f.neighbors(u).front() == c) leaves.push_back(u);
        if (leaves.empty()) continue;
        VertexSet s = vset_union({c}, leaves);
        if (has_perfect_matching(f, vset_minus(f.vertices(), s))) out.push_back(Superstar{c, leaves});
    }
    return out;
}

// --------------------------------------------------------------------------
// the two k=2 catalogues (used as cross-checks)

enum class DiracClass { A, B, C, D, E };
enum class LovaszClass { K5 = 1, Wheel = 2, ThreeClass = 3, ForestApex = 4 };

namespace detail {

inline bool is_complete(const SimpleGraph& g) {
    int n = g.order();
    for (Vertex v : g.vertices())
        if (g.degree(v) != n - 1) return false;
    return true;
}

inline std::vector<std::pair<Vertex, Vertex>> strong_pairs(const Multigraph& g) {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (auto [u, v, m] : g.edges())
        if (m >= 2) out.emplace_back(u, v);
    return out;
}

// all pairs share a common vertex (empty and single-edge sets count)
inline bool edges_form_star(const std::vector<std::pair<Vertex, Vertex>>& edges) {
    if (edges.size() <= 1) return true;
    for (Vertex c : {edges[0].first, edges[0].second}) {
        bool ok = true;
        for (auto [u, v] : edges)
            if (u != c && v != c) {
                ok = false;
                break;
            }
        if (ok) return true;
    }
    return false;
}

inline bool edges_form_triangle(const std::vector<std::pair<Vertex, Vertex>>& edges) {
    if (edges.size() != 3) return false;
    VertexSet verts;
    for (auto [u, v] : edges) {
        verts.push_back(u);
        verts.push_back(v);
    }
    return sorted_unique(std::move(verts)).size() == 3;
}

// G = K_{3,n-3} with extra loopless edges inside the 3-class T. Every vertex
// outside T must have neighborhood exactly T with all cross multiplicities 1.
inline bool has_three_class_shape(const Multigraph& g) {
    if (g.has_loops()) return false;
    int n = g.vertex_count();
    if (n < 4) return false;
    std::set<VertexSet> candidates;
    for (Vertex v = 0; v < n; ++v) {
        if (g.simple_degree(v) != 3) continue;
        VertexSet t;
        for (const auto& [u, m] : g.neighbors(v)) t.push_back(u);
        candidates.insert(t);
    }
    for (const VertexSet& t : candidates) {
        bool ok = true;
        for (Vertex w = 0; w < n && ok; ++w) {
            if (vset_contains(t, w)) continue;
            if (g.simple_degree(w) != 3) {
                ok = false;
                break;
            }
            for (const auto& [u, m] : g.neighbors(w))
                if (!vset_contains(t, u) || m != 1) {
                    ok = false;
                    break;
                }
        }
        if (ok) return true;
    }
    return false;
}

// acyclic and simple away from x, loops only at x
inline bool has_forest_plus_apex_shape(const Multigraph& g, Vertex x) {
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (v != x && g.loop_count(v) > 0) return false;
    for (auto [u, v, m] : g.edges())
        if (u != x && v != x && m >= 2) return false;
    // forest check on G - x via union-find
    std::vector<Vertex> root(g.vertex_count());
    std::iota(root.begin(), root.end(), 0);
    auto find = [&](Vertex v) {
        while (root[v] != v) v = root[v] = root[root[v]];
        return v;
    };
    for (auto [u, v, m] : g.edges()) {
        if (u == x || v == x) continue;
        Vertex ru = find(u), rv = find(v);
        if (ru == rv) return false;
        root[ru] = rv;
    }
    return true;
}

}  // namespace detail

// Dirac's catalogue of 3-connected multigraphs without two disjoint cycles.
// First match in the documented order A..E; loops disqualify.
inline std::optional<DiracClass> dirac_class(const Multigraph& g) {
    if (g.has_loops()) return std::nullopt;
    SimpleGraph u = underlying_simple(g);
    auto strong = detail::strong_pairs(g);
    int n = g.vertex_count();

    if (n == 4 && detail::is_complete(u) &&
        (detail::edges_form_star(strong) || detail::edges_form_triangle(strong)))
        return DiracClass::A;

    if (n == 5 && detail::is_complete(u) && strong.empty()) return DiracClass::B;

    if (n == 5) {
        // underlying K5 - e, strong edges away from the ends of e
        std::vector<std::pair<Vertex, Vertex>> missing;
        for (Vertex a = 0; a < 5; ++a)
            for (Vertex b = a + 1; b < 5; ++b)
                if (!u.adjacent(a, b)) missing.emplace_back(a, b);
        if (missing.size() == 1) {
            auto [a, b] = missing[0];
            bool clear = true;
            for (auto [x, y] : strong)
                if (x == a || x == b || y == a || y == b) {
                    clear = false;
                    break;
                }
            if (clear) return DiracClass::C;
        }
    }

    if (wheel_hub(g)) return DiracClass::D;
    if (detail::has_three_class_shape(g)) return DiracClass::E;
    return std::nullopt;
}

// Lovasz's catalogue of min-degree-3 multigraphs without two disjoint
// cycles; first match in order 1..4.
inline std::optional<LovaszClass> lovasz_class(const Multigraph& g) {
    SimpleGraph u = underlying_simple(g);
    bool loopless = !g.has_loops();

    if (loopless && g.vertex_count() == 5 && detail::is_complete(u) && detail::strong_pairs(g).empty())
        return LovaszClass::K5;
    if (loopless && wheel_hub(g)) return LovaszClass::Wheel;
    if (loopless && detail::has_three_class_shape(g)) return LovaszClass::ThreeClass;
    for (Vertex x = 0; x < g.vertex_count(); ++x)
        if (detail::has_forest_plus_apex_shape(g, x)) return LovaszClass::ForestApex;
    return std::nullopt;
}

}  // namespace cyclepack
