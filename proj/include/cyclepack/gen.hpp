#pragma once

// Constructors for the named graphs and for one representative family per
// obstruction class, plus seeded random D_k multigraphs for fuzzing. Every
// constructor lays the structure out on a canonical id range and then
// applies a seeded relabeling, so one (params, seed) pair is one concrete
// instance and recognizers get exercised on nontrivial labelings.

#include <string>

#include "classify.hpp"
#include "graph.hpp"
#include "rng.hpp"

namespace cyclepack {

// Y_{h,t}: independent h-set joined to two disjoint t-cliques.
// Layout: X0 = [0,h), X1 = [h,h+t), X2 = [h+t,h+2t).
inline SimpleGraph y_graph(int h, int t) {
    if (h < 0) throw std::invalid_argument("y_graph: h must be nonnegative");
    if (t < 1) throw std::invalid_argument("y_graph: t must be positive");
    int n = h + 2 * t;
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex a = 0; a < h; ++a)
        for (Vertex b = h; b < n; ++b) edges.emplace_back(a, b);
    for (Vertex a = h; a < h + t; ++a)
        for (Vertex b = a + 1; b < h + t; ++b) edges.emplace_back(a, b);
    for (Vertex a = h + t; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b) edges.emplace_back(a, b);
    return SimpleGraph(n, edges);
}

inline Multigraph multigraph_from_simple(const SimpleGraph& g) {
    Multigraph out(g.id_space());
    for (auto [u, v] : g.edge_list()) out.add_edge(u, v);
    return out;
}

enum class FamilyClass { A, B_I, B_II, C_I, C_II, D_I, D_II, E, F };

inline std::string family_class_name(FamilyClass c) {
    switch (c) {
        case FamilyClass::A: return "A";
        case FamilyClass::B_I: return "B_I";
        case FamilyClass::B_II: return "B_II";
        case FamilyClass::C_I: return "C_I";
        case FamilyClass::C_II: return "C_II";
        case FamilyClass::D_I: return "D_I";
        case FamilyClass::D_II: return "D_II";
        case FamilyClass::E: return "E";
        case FamilyClass::F: return "F";
    }
    return "?";
}

struct FamilySpec {
    FamilyClass cls = FamilyClass::A;
    int k = 0;             // A, B_II, C_I, C_II
    int k_prime = 0;       // B_I, D_I, D_II
    int alpha_prime = 0;   // A, B_I, D_I, D_II, F
    int n = 0;             // A, C_I, C_II
    int rim = 0;           // E
    int strong_count = 0;  // C_I, C_II: doubled pairs / star edges; E: strong spokes
    int leaves = 1;        // D_I: superstar leaf count
    bool extra_r_strong = false;  // C_II: extra doubled pairs inside R
    std::uint64_t seed = 0;       // relabeling
};

// k at which the class's condition fires
inline int family_k(const FamilySpec& s) {
    switch (s.cls) {
        case FamilyClass::A:
        case FamilyClass::B_II:
        case FamilyClass::C_I:
        case FamilyClass::C_II: return s.k;
        case FamilyClass::B_I:
        case FamilyClass::D_I:
        case FamilyClass::D_II: return s.k_prime + s.alpha_prime;
        case FamilyClass::E: return 2;
        case FamilyClass::F: return s.alpha_prime + 2;
    }
    return 0;
}

namespace detail {

[[noreturn]] inline void spec_error(const FamilySpec& s, const std::string& what) {
    throw std::invalid_argument("make_family(" + family_class_name(s.cls) + "): " + what);
}

inline void complete_simple(Multigraph& g, Vertex lo, Vertex hi) {
    for (Vertex a = lo; a < hi; ++a)
        for (Vertex b = a + 1; b < hi; ++b) g.add_edge(a, b);
}

inline void join_simple(Multigraph& g, Vertex alo, Vertex ahi, Vertex blo, Vertex bhi) {
    for (Vertex a = alo; a < ahi; ++a)
        for (Vertex b = blo; b < bhi; ++b) g.add_edge(a, b);
}

inline void add_simple_edges(Multigraph& g, const SimpleGraph& s) {
    for (auto [u, v] : s.edge_list()) g.add_edge(u, v);
}

inline Multigraph relabel(const Multigraph& g, std::uint64_t seed) {
    std::vector<Vertex> perm(g.vertex_count());
    std::iota(perm.begin(), perm.end(), 0);
    Rng rng(seed);
    rng_shuffle(rng, perm);
    Multigraph out(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.loop_count(v) > 0) out.add_loop(perm[v], g.loop_count(v));
    for (auto [u, v, m] : g.edges()) out.add_edge(perm[u], perm[v], m);
    return out;
}

inline Multigraph family_a(const FamilySpec& s) {
    if (s.k < 2) spec_error(s, "k must be at least 2");
    if (s.alpha_prime < 0) spec_error(s, "alpha_prime must be nonnegative");
    if (s.n < 2 * s.k) spec_error(s, "n must be at least 2k");
    if (2 * s.alpha_prime > s.n) spec_error(s, "alpha_prime must fit: 2*alpha_prime <= n");
    if (s.n + s.alpha_prime >= 3 * s.k) spec_error(s, "requires n + alpha_prime < 3k");
    Multigraph g(s.n);
    complete_simple(g, 0, s.n);
    for (int i = 0; i < s.alpha_prime; ++i) g.add_edge(2 * i, 2 * i + 1);  // doubles
    return g;
}

// W (alpha' doubled pairs, completely joined) on top of Y_{k',k'} or the
// 5-spoke wheel.
inline Multigraph family_b(const FamilySpec& s, bool wheel_core) {
    int k_prime = wheel_core ? 2 : s.k_prime;
    int alpha_prime = wheel_core ? s.k - 2 : s.alpha_prime;
    if (wheel_core) {
        if (s.k < 3) spec_error(s, "k must be at least 3 (k' = 2 < k)");
    } else {
        if (s.k_prime < 1 || s.k_prime % 2 == 0) spec_error(s, "k_prime must be odd and positive");
        if (s.alpha_prime < 0) spec_error(s, "alpha_prime must be nonnegative");
        if (s.k_prime + s.alpha_prime < 2) spec_error(s, "k = k_prime + alpha_prime must be at least 2");
    }
    int core = wheel_core ? 6 : 3 * k_prime;
    int n = core + 2 * alpha_prime;
    Multigraph g(n);
    if (wheel_core) {
        for (Vertex r = 1; r <= 5; ++r) {
            g.add_edge(0, r);
            g.add_edge(r, r == 5 ? 1 : r + 1);
        }
    } else {
        add_simple_edges(g, y_graph(k_prime, k_prime));
    }
    complete_simple(g, core, n);
    join_simple(g, 0, core, core, n);
    for (int i = 0; i < alpha_prime; ++i) g.add_edge(core + 2 * i, core + 2 * i + 1);  // doubles
    return g;
}

inline Multigraph family_c1(const FamilySpec& s) {
    if (s.k < 2) spec_error(s, "k must be at least 2");
    if (s.n < 2 * s.k) spec_error(s, "n must be at least 2k");
    if (s.strong_count < 0 || 2 * s.strong_count > 2 * s.k - 1)
        spec_error(s, "strong_count must satisfy 0 <= 2*strong_count <= 2k-1");
    int m = s.n - 2 * s.k + 1;  // big independent side
    Multigraph g(s.n);
    join_simple(g, 0, m, m, s.n);
    complete_simple(g, m, s.n);
    for (int i = 0; i < s.strong_count; ++i) g.add_edge(m + 2 * i, m + 2 * i + 1);
    return g;
}

inline Multigraph family_c2(const FamilySpec& s) {
    if (s.k < 2) spec_error(s, "k must be at least 2");
    if (s.n < 2 * s.k || s.n > 4 * s.k - 3) spec_error(s, "n must satisfy 2k <= n <= 4k-3");
    int m = s.n - 2 * s.k + 1;
    int r = s.n - 2 * m;  // >= 1 by the range check
    if (s.strong_count < 0 || s.strong_count > 2 * m)
        spec_error(s, "strong_count must satisfy 0 <= strong_count <= 2*(n-2k+1)");
    Multigraph g(s.n);
    Vertex c = 2 * m;  // common endpoint of the strong star, inside R
    join_simple(g, 0, m, m, s.n);       // I1 to everything else
    join_simple(g, m, 2 * m, 2 * m, s.n);  // I2 to R
    complete_simple(g, 2 * m, s.n);
    for (int i = 0; i < s.strong_count; ++i) g.add_edge(i, c);  // doubles the cross edge
    if (s.extra_r_strong && r >= 3)
        for (Vertex a = c + 1; a + 1 < s.n; a += 2) g.add_edge(a, a + 1);
    return g;
}

inline Multigraph family_d(const FamilySpec& s, bool variant_two) {
    if (s.k_prime < 1 || s.k_prime % 2 == 0) spec_error(s, "k_prime must be odd and positive");
    if (s.alpha_prime < 1) spec_error(s, "alpha_prime must be at least 1");
    int k_prime = s.k_prime;
    int alpha_prime = s.alpha_prime;
    int n = 2 * alpha_prime + 3 * k_prime;
    if (!variant_two) {
        if (s.leaves < 1 || s.leaves > k_prime + 1)
            spec_error(s, "leaves must satisfy 1 <= leaves <= k_prime+1");
        // Y_{k'+1,k'} with the superstar leaves inside X0
        Multigraph g(n);
        add_simple_edges(g, y_graph(k_prime + 1, k_prime));
        int y_top = 3 * k_prime + 1;
        Vertex v0 = y_top;
        join_simple(g, 0, y_top, y_top, n);  // W fully joined to the Y part
        complete_simple(g, y_top, n);        // W internal
        for (int i = 0; i < s.leaves; ++i) g.add_edge(v0, i);  // strong star into X0
        for (int i = 0; i < alpha_prime - 1; ++i)
            g.add_edge(y_top + 1 + 2 * i, y_top + 2 + 2 * i);  // strong matching in F - S
        return g;
    }
    // variant (ii): s = 2, adjacent leaves v1 v2, remainder Y_{k'-1,k'} with
    // no edges from the leaves into X0
    Multigraph g(n);
    add_simple_edges(g, y_graph(k_prime - 1, k_prime));
    int y_top = 3 * k_prime - 1;
    Vertex v1 = y_top, v2 = y_top + 1, v0 = y_top + 2;
    int x0_hi = k_prime - 1;
    complete_simple(g, y_top, n);                  // W' internal (gives v1-v2)
    join_simple(g, x0_hi, y_top, y_top, n);        // X1, X2 to all of W'
    join_simple(g, 0, x0_hi, v0, n);               // X0 avoids v1 and v2
    g.add_edge(v0, v1);                            // bump to strong
    g.add_edge(v0, v2);
    for (int i = 0; i < alpha_prime - 1; ++i) g.add_edge(v0 + 1 + 2 * i, v0 + 2 + 2 * i);
    return g;
}

inline Multigraph family_e(const FamilySpec& s) {
    if (s.rim < 3) spec_error(s, "rim must be at least 3");
    if (s.strong_count < 0 || s.strong_count > s.rim)
        spec_error(s, "strong_count must satisfy 0 <= strong_count <= rim");
    Multigraph g(s.rim + 1);
    for (Vertex r = 1; r <= s.rim; ++r) {
        g.add_edge(0, r);
        g.add_edge(r, r == s.rim ? 1 : r + 1);
    }
    for (int i = 0; i < s.strong_count; ++i) g.add_edge(0, 1 + i);  // doubled spokes
    return g;
}

inline Multigraph family_f(const FamilySpec& s) {
    if (s.alpha_prime < 1) spec_error(s, "alpha_prime must be at least 1");
    int n = 2 * s.alpha_prime + 6;
    Multigraph g(n);
    for (Vertex i = 0; i < 5; ++i) g.add_edge(i, (i + 1) % 5);  // induced C5
    complete_simple(g, 5, n);
    join_simple(g, 0, 5, 5, n);
    for (int i = 0; i < s.alpha_prime; ++i) g.add_edge(5 + 2 * i, 6 + 2 * i);  // strong matching
    g.add_edge(n - 1, n - 2);  // pendant strong edge at a matched vertex
    return g;
}

}  // namespace detail

// A loopless multigraph whose obstruction conditions include spec.cls at
// k = family_k(spec); always in D_k.
inline Multigraph make_family(const FamilySpec& spec) {
    Multigraph g;
    switch (spec.cls) {
        case FamilyClass::A: g = detail::family_a(spec); break;
        case FamilyClass::B_I: g = detail::family_b(spec, false); break;
        case FamilyClass::B_II: g = detail::family_b(spec, true); break;
        case FamilyClass::C_I: g = detail::family_c1(spec); break;
        case FamilyClass::C_II: g = detail::family_c2(spec); break;
        case FamilyClass::D_I: g = detail::family_d(spec, false); break;
        case FamilyClass::D_II: g = detail::family_d(spec, true); break;
        case FamilyClass::E: g = detail::family_e(spec); break;
        case FamilyClass::F: g = detail::family_f(spec); break;
    }
    g = detail::relabel(g, spec.seed);
    assert(!g.has_loops());
    assert(in_Dk(g, family_k(spec)));
    return g;
}

// Random loopless simple graph repaired up to minimum simple degree d, then
// a seeded subset of edges doubled. Deterministic for a fixed rng state.
inline Multigraph random_multigraph_min_degree(Rng& rng, int n, int d, double strong_density) {
    if (n < 1) throw std::invalid_argument("random_multigraph_min_degree: n must be positive");
    if (d >= n) throw std::invalid_argument("random_multigraph_min_degree: need d <= n-1");
    double p = 0.15 + 0.75 * rng_unit(rng);
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng_chance(rng, p)) adj[u][v] = adj[v][u] = 1;
    std::vector<int> deg(n, 0);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v) deg[u] += adj[u][v];
    // repair deficits: least deficient vertex gets an edge to its
    // least-degree non-neighbor
    for (;;) {
        Vertex worst = -1;
        for (Vertex v = 0; v < n; ++v)
            if (deg[v] < d && (worst == -1 || deg[v] < deg[worst])) worst = v;
        if (worst == -1) break;
        Vertex pick = -1;
        for (Vertex u = 0; u < n; ++u)
            if (u != worst && !adj[worst][u] && (pick == -1 || deg[u] < deg[pick])) pick = u;
        assert(pick != -1);
        adj[worst][pick] = adj[pick][worst] = 1;
        ++deg[worst];
        ++deg[pick];
    }
    Multigraph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (adj[u][v]) g.add_edge(u, v, rng_chance(rng, strong_density) ? 2 : 1);
    return g;
}

inline Multigraph random_multigraph_in_Dk(int n, int k, double strong_density, std::uint64_t seed) {
    if (k < 1) throw std::invalid_argument("random_multigraph_in_Dk: k must be positive");
    if (n < 2 * k) throw std::invalid_argument("random_multigraph_in_Dk: need n >= 2k");
    Rng rng(seed);
    Multigraph g = random_multigraph_min_degree(rng, n, 2 * k - 1, strong_density);
    assert(in_Dk(g, k));
    return g;
}

}  // namespace cyclepack
