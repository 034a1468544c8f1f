#pragma once

// Decision procedures. decide() is the entry point: k = 1 is a plain cycle
// test, graphs with loops go through the loop-count formula, and loopless
// graphs in D_k are screened against the obstruction conditions (a)-(f).
// blockers() reports every satisfied condition (they overlap), each with a
// re-checkable witness.

#include <optional>
#include <sstream>
#include <variant>

#include "graph.hpp"
#include "matching.hpp"
#include "recognize.hpp"

namespace cyclepack {

enum class Verdict { Packable, Blocked, NotInDk, OutOfTheoremScope };

enum class BlockerTag {
    A,
    B_I,
    B_II,
    C_I,
    C_II,
    D_I,
    D_II,
    E,
    F,
    LoopFormula,
    SimpleAlpha,
    SimpleBeta,
    SimpleGamma,
    SimpleDelta,
    SimpleEpsilon,
};

struct CountWitness {
    int n = 0;
    int v1 = 0;
    int alpha_prime = 0;
    int k = 0;
};
struct HubWitness {
    Vertex hub = -1;
};
struct YShapeWitness {
    YWitness y;
};
struct BigSetWitness {
    BigSet set;
};
struct BigSetPairWitness {
    BigSet a, b;
    Vertex common = -1;  // -1: no strong edge meets the union
};
struct SuperstarYWitness {
    Superstar star;
    YWitness y;
};
struct CycleWitness {
    std::vector<Vertex> cycle;  // cyclic order, least vertex first
};
struct ForestWitness {};

using BlockerWitness = std::variant<CountWitness, HubWitness, YShapeWitness, BigSetWitness,
                                    BigSetPairWitness, SuperstarYWitness, CycleWitness, ForestWitness>;

struct Blocker {
    BlockerTag tag;
    BlockerWitness witness;
};

struct DerivedQuantities {
    int n = 0;
    int ms = 0;           // minimum simple degree
    int v1 = 0;           // |V1|
    int f_order = 0;      // |F|
    int alpha_prime = 0;  // alpha'(F)
    int k_prime = 0;      // k - alpha'
};

struct Decision {
    Verdict verdict = Verdict::Packable;
    std::vector<Blocker> blockers;
    DerivedQuantities derived;
};

inline DerivedQuantities derived_quantities(const Multigraph& g, int k) {
    DerivedQuantities d;
    d.n = g.vertex_count();
    d.ms = min_simple_degree(g);
    d.v1 = static_cast<int>(loop_vertices(g).size());
    SimpleGraph f = strong_edge_graph(g);
    d.f_order = f.order();
    d.alpha_prime = max_matching(f).size();
    d.k_prime = k - d.alpha_prime;
    return d;
}

namespace detail {

inline bool underlying_acyclic(const SimpleGraph& g) {
    std::vector<Vertex> root(g.id_space());
    std::iota(root.begin(), root.end(), 0);
    auto find = [&](Vertex v) {
        while (root[v] != v) v = root[v] = root[root[v]];
        return v;
    };
    for (auto [u, v] : g.edge_list()) {
        Vertex ru = find(u), rv = find(v);
        if (ru == rv) return false;
        root[ru] = rv;
    }
    return true;
}

// cyclic order of an induced cycle: least vertex first, lesser neighbor next
inline std::vector<Vertex> cycle_order(const SimpleGraph& g, const VertexSet& verts) {
    SimpleGraph sub = g.induced(verts);
    std::vector<Vertex> seq{sub.vertices().front()};
    Vertex prev = -1;
    while (static_cast<int>(seq.size()) < sub.order()) {
        Vertex cur = seq.back();
        Vertex next = -1;
        for (Vertex u : sub.neighbors(cur))
            if (u != prev) {
                next = u;
                break;
            }
        assert(next != -1);
        prev = cur;
        seq.push_back(next);
    }
    return seq;
}

}  // namespace detail

// All satisfied obstruction conditions for a loopless G in D_k, k >= 2.
inline std::vector<Blocker> blockers(const Multigraph& g, int k) {
    if (k < 2) throw std::invalid_argument("blockers: k must be at least 2");
    if (g.has_loops()) throw std::invalid_argument("blockers: graph must be loopless");
    if (!in_Dk(g, k)) throw std::invalid_argument("blockers: graph is not in D_k");

    const int n = g.vertex_count();
    SimpleGraph under = underlying_simple(g);
    SimpleGraph f = strong_edge_graph(g);
    const int alpha_prime = max_matching(f).size();
    const int k_prime = k - alpha_prime;
    const int f_order = f.order();
    const VertexSet rest = vset_minus(under.vertices(), f.vertices());  // V - V(F)

    std::vector<Blocker> out;

    // (a): too few vertices even with all strong 2-cycles used
    if (n + alpha_prime < 3 * k) out.push_back({BlockerTag::A, CountWitness{n, 0, alpha_prime, k}});

    // (b): F has a perfect matching and the rest is one of the two tight shapes
    if (f_order == 2 * alpha_prime) {
        SimpleGraph gf = under.induced(rest);
        if (k_prime >= 1 && k_prime % 2 == 1) {
            auto ws = y_witnesses(gf, k_prime, k_prime);
            if (!ws.empty()) out.push_back({BlockerTag::B_I, YShapeWitness{ws.front()}});
        }
        if (k_prime == 2 && k_prime < k && gf.order() == 6) {
            auto hub = wheel_hub(gf);
            if (hub) out.push_back({BlockerTag::B_II, HubWitness{*hub}});
        }
    }

    // (c): extremal obstructions
    auto bigs = big_sets(g, k);
    if (!bigs.empty()) {
        auto f_edges = f.edge_list();
        for (const BigSet& I : bigs) {
            bool touched = false;
            for (auto [u, v] : f_edges)
                if (vset_contains(I, u) || vset_contains(I, v)) {
                    touched = true;
                    break;
                }
            if (!touched) {
                out.push_back({BlockerTag::C_I, BigSetWitness{I}});
                break;
            }
        }
        for (std::size_t i = 0; i < bigs.size(); ++i) {
            bool fired = false;
            for (std::size_t j = i + 1; j < bigs.size(); ++j) {
                VertexSet u = vset_union(bigs[i], bigs[j]);
                std::vector<std::pair<Vertex, Vertex>> touching;
                for (auto e : f_edges)
                    if (vset_contains(u, e.first) || vset_contains(u, e.second)) touching.push_back(e);
                if (touching.empty()) {
                    out.push_back({BlockerTag::C_II, BigSetPairWitness{bigs[i], bigs[j], -1}});
                    fired = true;
                    break;
                }
                VertexSet cand{touching[0].first, touching[0].second};
                std::sort(cand.begin(), cand.end());
                for (std::size_t e = 1; e < touching.size() && !cand.empty(); ++e) {
                    VertexSet next;
                    if (vset_contains(cand, touching[e].first)) next.push_back(touching[e].first);
                    if (vset_contains(cand, touching[e].second)) next.push_back(touching[e].second);
                    cand = sorted_unique(std::move(next));
                }
                cand = vset_minus(cand, u);
                if (!cand.empty()) {
                    out.push_back({BlockerTag::C_II, BigSetPairWitness{bigs[i], bigs[j], cand.front()}});
                    fired = true;
                    break;
                }
            }
            if (fired) break;
        }
    }

    // (d): superstar obstructions at the tight order n = 2a' + 3k'
    if (k_prime >= 1 && k_prime % 2 == 1 && n == 2 * alpha_prime + 3 * k_prime) {
        std::optional<SuperstarYWitness> d1, d2;
        for (const Superstar& s : superstars(f)) {
            if (!d1) {
                // G - (F - S + v0) keeps the leaves and drops the rest of F
                SimpleGraph h = under.induced(vset_union(rest, s.leaves));
                auto ws = y_witnesses(h, k_prime + 1, k_prime);
                if (!ws.empty()) d1 = SuperstarYWitness{s, ws.front()};
            }
            if (!d2 && s.leaves.size() == 2 && g.multiplicity(s.leaves[0], s.leaves[1]) >= 1) {
                SimpleGraph gf = under.induced(rest);
                for (const YWitness& w : y_witnesses(gf, k_prime - 1, k_prime)) {
                    bool clean = true;
                    for (Vertex x : w.x0)
                        if (under.adjacent(s.leaves[0], x) || under.adjacent(s.leaves[1], x)) {
                            clean = false;
                            break;
                        }
                    if (clean) {
                        d2 = SuperstarYWitness{s, w};
                        break;
                    }
                }
            }
        }
        if (d1) out.push_back({BlockerTag::D_I, *d1});
        if (d2) out.push_back({BlockerTag::D_II, *d2});
    }

    // (e): k = 2 wheels, strong spokes allowed
    if (k == 2) {
        auto hub = wheel_hub(g);
        if (hub) out.push_back({BlockerTag::E, HubWitness{*hub}});
    }

    // (f): near-perfect F with a C5 remainder
    if (k_prime == 2 && f_order == 2 * alpha_prime + 1 && f_order == n - 5 && is_cycle(under, rest))
        out.push_back({BlockerTag::F, CycleWitness{detail::cycle_order(under, rest)}});

    return out;
}

// Theorem for minimum simple degree >= 2k: the plain counting formula.
inline Decision decide_ms2k(const Multigraph& g, int k) {
    if (k < 1) throw std::invalid_argument("decide_ms2k: k must be positive");
    DerivedQuantities d = derived_quantities(g, k);
    if (g.vertex_count() == 0 || d.ms < 2 * k) return {Verdict::OutOfTheoremScope, {}, d};
    if (d.n + 2 * d.v1 + d.alpha_prime < 3 * k)
        return {Verdict::Blocked, {Blocker{BlockerTag::LoopFormula, CountWitness{d.n, d.v1, d.alpha_prime, k}}}, d};
    return {Verdict::Packable, {}, d};
}

// Corollary for graphs in D_k with at least one loop: same formula.
inline Decision decide_with_loops(const Multigraph& g, int k) {
    if (k < 1) throw std::invalid_argument("decide_with_loops: k must be positive");
    DerivedQuantities d = derived_quantities(g, k);
    if (!in_Dk(g, k)) return {Verdict::NotInDk, {}, d};
    if (k < 2 || d.v1 == 0) return {Verdict::OutOfTheoremScope, {}, d};
    if (d.n + 2 * d.v1 + d.alpha_prime < 3 * k)
        return {Verdict::Blocked, {Blocker{BlockerTag::LoopFormula, CountWitness{d.n, d.v1, d.alpha_prime, k}}}, d};
    return {Verdict::Packable, {}, d};
}

// Simple-graph characterization, all five cases reported.
inline Decision decide_simple(const SimpleGraph& g, int k) {
    if (k < 1) throw std::invalid_argument("decide_simple: k must be positive");
    DerivedQuantities d;
    d.n = g.order();
    d.ms = g.min_degree();
    d.alpha_prime = 0;
    d.k_prime = k;
    if (g.order() == 0 || d.ms < 2 * k - 1) return {Verdict::NotInDk, {}, d};

    std::vector<Blocker> out;
    if (d.n <= 3 * k - 1) out.push_back({BlockerTag::SimpleAlpha, CountWitness{d.n, 0, 0, k}});
    if (k == 1 && detail::underlying_acyclic(g)) out.push_back({BlockerTag::SimpleBeta, ForestWitness{}});
    if (k == 2) {
        auto hub = wheel_hub(g);
        if (hub) out.push_back({BlockerTag::SimpleGamma, HubWitness{*hub}});
    }
    auto bigs = big_sets(g, k);
    if (!bigs.empty()) out.push_back({BlockerTag::SimpleDelta, BigSetWitness{bigs.front()}});
    if (k > 1 && k % 2 == 1) {
        auto w = y_witness(g, k, k);
        if (w) out.push_back({BlockerTag::SimpleEpsilon, YShapeWitness{*w}});
    }
    if (!out.empty()) return {Verdict::Blocked, std::move(out), d};
    return {Verdict::Packable, {}, d};
}

// Unified entry point.
inline Decision decide(const Multigraph& g, int k) {
    if (k < 1) throw std::invalid_argument("decide: k must be positive");
    DerivedQuantities d = derived_quantities(g, k);
    if (k == 1) {
        bool cyclic = g.has_loops();
        if (!cyclic)
            for (auto [u, v, m] : g.edges())
                if (m >= 2) {
                    cyclic = true;
                    break;
                }
        if (!cyclic) cyclic = !detail::underlying_acyclic(underlying_simple(g));
        if (cyclic) return {Verdict::Packable, {}, d};
        return {Verdict::Blocked, {Blocker{BlockerTag::SimpleBeta, ForestWitness{}}}, d};
    }
    if (!in_Dk(g, k)) return {Verdict::NotInDk, {}, d};
    if (g.has_loops()) return decide_with_loops(g, k);
    auto bl = blockers(g, k);
    if (!bl.empty()) return {Verdict::Blocked, std::move(bl), d};
    return {Verdict::Packable, {}, d};
}

// Sufficient (one-sided) surplus test: enough vertices of degree >= 2k over
// vertices of degree <= 2k-2 force k disjoint cycles. False means only
// "inconclusive".
inline bool dirac_erdos_sufficient(const SimpleGraph& g, int k) {
    if (k < 3) throw std::invalid_argument("dirac_erdos_sufficient: requires k >= 3");
    long long high = 0, low = 0;
    for (Vertex v : g.vertices()) {
        int deg = g.degree(v);
        if (deg >= 2 * k) ++high;
        if (deg <= 2 * k - 2) ++low;
    }
    return high - low >= static_cast<long long>(k) * k + 2 * k - 4;
}

// --------------------------------------------------------------------------
// witness re-validation (used by tests and the fuzz harness)

inline bool validate_blocker(const Multigraph& g, int k, const Blocker& b) {
    const int n = g.vertex_count();
    SimpleGraph under = underlying_simple(g);
    SimpleGraph f = strong_edge_graph(g);
    const int alpha_prime = max_matching(f).size();
    const int k_prime = k - alpha_prime;
    const VertexSet rest = vset_minus(under.vertices(), f.vertices());
    const int v1 = static_cast<int>(loop_vertices(g).size());

    switch (b.tag) {
        case BlockerTag::A: {
            auto w = std::get<CountWitness>(b.witness);
            return v1 == 0 && w.n == n && w.alpha_prime == alpha_prime && w.k == k && n + alpha_prime < 3 * k;
        }
        case BlockerTag::B_I: {
            auto w = std::get<YShapeWitness>(b.witness);
            return f.order() == 2 * alpha_prime && k_prime >= 1 && k_prime % 2 == 1 &&
                   y_witness_valid(under.induced(rest), w.y, k_prime, k_prime);
        }
        case BlockerTag::B_II: {
            auto w = std::get<HubWitness>(b.witness);
            SimpleGraph gf = under.induced(rest);
            return f.order() == 2 * alpha_prime && k_prime == 2 && k_prime < k && gf.order() == 6 &&
                   gf.is_active(w.hub) && gf.degree(w.hub) == 5 &&
                   is_cycle(gf, vset_minus(gf.vertices(), {w.hub}));
        }
        case BlockerTag::C_I: {
            auto w = std::get<BigSetWitness>(b.witness);
            auto bigs = big_sets(g, k);
            if (!std::binary_search(bigs.begin(), bigs.end(), w.set)) return false;
            for (auto [u, v] : f.edge_list())
                if (vset_contains(w.set, u) || vset_contains(w.set, v)) return false;
            return true;
        }
        case BlockerTag::C_II: {
            auto w = std::get<BigSetPairWitness>(b.witness);
            auto bigs = big_sets(g, k);
            if (w.a == w.b) return false;
            if (!std::binary_search(bigs.begin(), bigs.end(), w.a) ||
                !std::binary_search(bigs.begin(), bigs.end(), w.b))
                return false;
            VertexSet u = vset_union(w.a, w.b);
            bool any = false;
            for (auto [x, y] : f.edge_list()) {
                if (!vset_contains(u, x) && !vset_contains(u, y)) continue;
                any = true;
                if (w.common == -1) return false;  // claimed vacuous but an edge meets the union
                if (x != w.common && y != w.common) return false;
            }
            if (w.common == -1) return !any;
            return !vset_contains(u, w.common);
        }
        case BlockerTag::D_I:
        case BlockerTag::D_II: {
            auto w = std::get<SuperstarYWitness>(b.witness);
            if (!(k_prime >= 1 && k_prime % 2 == 1 && n == 2 * alpha_prime + 3 * k_prime)) return false;
            // superstar structure in F
            if (w.star.leaves.empty()) return false;
            for (Vertex leaf : w.star.leaves)
                if (!(f.is_active(leaf) && f.degree(leaf) == 1 && f.neighbors(leaf).front() == w.star.center))
                    return false;
            VertexSet s = vset_union({w.star.center}, w.star.leaves);
            if (!has_perfect_matching(f, vset_minus(f.vertices(), s))) return false;
            if (b.tag == BlockerTag::D_I)
                return y_witness_valid(under.induced(vset_union(rest, w.star.leaves)), w.y, k_prime + 1,
                                       k_prime);
            if (w.star.leaves.size() != 2) return false;
            if (g.multiplicity(w.star.leaves[0], w.star.leaves[1]) < 1) return false;
            for (Vertex x : w.y.x0)
                if (under.adjacent(w.star.leaves[0], x) || under.adjacent(w.star.leaves[1], x)) return false;
            return y_witness_valid(under.induced(rest), w.y, k_prime - 1, k_prime);
        }
        case BlockerTag::E: {
            auto w = std::get<HubWitness>(b.witness);
            if (k != 2 || !under.is_active(w.hub)) return false;
            if (under.degree(w.hub) != n - 1) return false;
            if (!is_cycle(under, vset_minus(under.vertices(), {w.hub}))) return false;
            for (auto [a, bb, m] : g.edges())
                if (m >= 2 && a != w.hub && bb != w.hub) return false;
            return true;
        }
        case BlockerTag::F: {
            auto w = std::get<CycleWitness>(b.witness);
            if (!(k_prime == 2 && f.order() == 2 * alpha_prime + 1 && f.order() == n - 5)) return false;
            VertexSet cyc = sorted_unique(w.cycle);
            if (cyc != rest || w.cycle.size() != 5) return false;
            if (!is_cycle(under, cyc)) return false;
            for (std::size_t i = 0; i < w.cycle.size(); ++i)
                if (!under.adjacent(w.cycle[i], w.cycle[(i + 1) % w.cycle.size()])) return false;
            return true;
        }
        case BlockerTag::LoopFormula: {
            auto w = std::get<CountWitness>(b.witness);
            return w.n == n && w.v1 == v1 && w.alpha_prime == alpha_prime && w.k == k &&
                   n + 2 * v1 + alpha_prime < 3 * k;
        }
        case BlockerTag::SimpleBeta:
            return !g.has_loops() && detail::strong_pairs(g).empty() && detail::underlying_acyclic(under);
        default:
            return false;  // Simple* tags validate against a SimpleGraph
    }
}

inline bool validate_blocker(const SimpleGraph& g, int k, const Blocker& b) {
    switch (b.tag) {
        case BlockerTag::SimpleAlpha: {
            auto w = std::get<CountWitness>(b.witness);
            return w.n == g.order() && w.k == k && g.order() <= 3 * k - 1;
        }
        case BlockerTag::SimpleBeta:
            return k == 1 && detail::underlying_acyclic(g);
        case BlockerTag::SimpleGamma: {
            auto w = std::get<HubWitness>(b.witness);
            return k == 2 && g.is_active(w.hub) && g.degree(w.hub) == g.order() - 1 &&
                   is_cycle(g, vset_minus(g.vertices(), {w.hub}));
        }
        case BlockerTag::SimpleDelta: {
            auto w = std::get<BigSetWitness>(b.witness);
            auto bigs = big_sets(g, k);
            return std::binary_search(bigs.begin(), bigs.end(), w.set);
        }
        case BlockerTag::SimpleEpsilon: {
            auto w = std::get<YShapeWitness>(b.witness);
            return k > 1 && k % 2 == 1 && y_witness_valid(g, w.y, k, k);
        }
        default:
            return false;
    }
}

// --------------------------------------------------------------------------
// report formatting (line-oriented, stable field order)

inline std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Packable: return "Packable";
        case Verdict::Blocked: return "Blocked";
        case Verdict::NotInDk: return "NotInDk";
        case Verdict::OutOfTheoremScope: return "OutOfTheoremScope";
    }
    return "?";
}

inline std::string blocker_tag_name(BlockerTag t) {
    switch (t) {
        case BlockerTag::A: return "A";
        case BlockerTag::B_I: return "B_I";
        case BlockerTag::B_II: return "B_II";
        case BlockerTag::C_I: return "C_I";
        case BlockerTag::C_II: return "C_II";
        case BlockerTag::D_I: return "D_I";
        case BlockerTag::D_II: return "D_II";
        case BlockerTag::E: return "E";
        case BlockerTag::F: return "F";
        case BlockerTag::LoopFormula: return "LoopFormula";
        case BlockerTag::SimpleAlpha: return "SimpleAlpha";
        case BlockerTag::SimpleBeta: return "SimpleBeta";
        case BlockerTag::SimpleGamma: return "SimpleGamma";
        case BlockerTag::SimpleDelta: return "SimpleDelta";
        case BlockerTag::SimpleEpsilon: return "SimpleEpsilon";
    }
    return "?";
}

namespace detail {

inline std::string join(const std::vector<Vertex>& vs) {
    std::string out;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(vs[i]);
    }
    return out;
}

}  // namespace detail

inline std::string witness_text(const Blocker& b) {
    std::ostringstream out;
    std::visit(
        [&](const auto& w) {
            using T = std::decay_t<decltype(w)>;
            if constexpr (std::is_same_v<T, CountWitness>) {
                if (b.tag == BlockerTag::SimpleAlpha)
                    out << "n=" << w.n << ";k=" << w.k;
                else if (b.tag == BlockerTag::A)
                    out << "n=" << w.n << ";alpha_prime=" << w.alpha_prime << ";k=" << w.k;
                else
                    out << "n=" << w.n << ";v1=" << w.v1 << ";alpha_prime=" << w.alpha_prime << ";k=" << w.k;
            } else if constexpr (std::is_same_v<T, HubWitness>) {
                out << "hub=" << w.hub;
            } else if constexpr (std::is_same_v<T, YShapeWitness>) {
                out << "X0=" << detail::join(w.y.x0) << ";X1=" << detail::join(w.y.x1)
                    << ";X2=" << detail::join(w.y.x2);
            } else if constexpr (std::is_same_v<T, BigSetWitness>) {
                out << "big_set=" << detail::join(w.set);
            } else if constexpr (std::is_same_v<T, BigSetPairWitness>) {
                out << "big_sets=" << detail::join(w.a) << "|" << detail::join(w.b) << ";common=";
                if (w.common == -1)
                    out << "none";
                else
                    out << w.common;
            } else if constexpr (std::is_same_v<T, SuperstarYWitness>) {
                out << "center=" << w.star.center << ";leaves=" << detail::join(w.star.leaves)
                    << ";X0=" << detail::join(w.y.x0) << ";X1=" << detail::join(w.y.x1)
                    << ";X2=" << detail::join(w.y.x2);
            } else if constexpr (std::is_same_v<T, CycleWitness>) {
                out << "c5=" << detail::join(w.cycle);
            } else if constexpr (std::is_same_v<T, ForestWitness>) {
                out << "forest";
            }
        },
        b.witness);
    return out.str();
}

inline std::string format_report(const Decision& d) {
    std::ostringstream out;
    out << "verdict=" << verdict_name(d.verdict) << "\n";
    out << "k_prime=" << d.derived.k_prime << "\n";
    out << "alpha_prime=" << d.derived.alpha_prime << "\n";
    for (const Blocker& b : d.blockers)
        out << "blocker=" << blocker_tag_name(b.tag) << " witness=" << witness_text(b) << "\n";
    return out.str();
}

}  // namespace cyclepack
