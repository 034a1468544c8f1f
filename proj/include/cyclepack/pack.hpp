#pragma once

// Exact vertex-disjoint cycle packing. find_disjoint_cycles answers the
// decision "k disjoint cycles?" definitively when the search space fits the
// budget, and extracts a certificate packing on success.
//
// Search plan: loops are taken greedily (a loop costs one vertex and never
// hurts: any packing avoiding a looped vertex v can swap one cycle for v's
// loop), strong edges are tried as 2-cycles, and longer cycles are
// enumerated chordless only - a chorded cycle can always be replaced by a
// shorter cycle on a subset of its vertices. Results per vertex subset are
// memoized, capped at k; the pruning bound charges 1 vertex per loop, 2 per
// strong pair, 3 per remaining cycle.

#include <bit>
#include <cstdint>
#include <limits>
#include <unordered_map>

#include "graph.hpp"

namespace cyclepack {

struct CyclePacking {
    // length 1 = loop, length 2 = strong edge, length >= 3 = simple cycle in
    // cyclic order (least vertex first, lesser neighbor second)
    std::vector<std::vector<Vertex>> cycles;
};

enum class PackStatus { Found, Absent, Unknown };

struct PackResult {
    PackStatus status = PackStatus::Unknown;
    CyclePacking packing;        // valid iff status == Found
    long long expansions = 0;    // search effort actually spent
};

inline constexpr long long pack_default_budget = 100'000'000;

inline bool verify_packing(const Multigraph& g, int k, const CyclePacking& p) {
    if (static_cast<int>(p.cycles.size()) != k) return false;
    std::vector<char> used(g.vertex_count(), 0);
    for (const auto& c : p.cycles) {
        if (c.empty()) return false;
        for (Vertex v : c) {
            if (v < 0 || v >= g.vertex_count()) return false;
            if (used[v]) return false;
            used[v] = 1;
        }
        if (c.size() == 1) {
            if (g.loop_count(c[0]) < 1) return false;
        } else if (c.size() == 2) {
            if (g.multiplicity(c[0], c[1]) < 2) return false;
        } else {
            for (std::size_t i = 0; i < c.size(); ++i)
                if (g.multiplicity(c[i], c[(i + 1) % c.size()]) < 1) return false;
        }
    }
    return true;
}

namespace detail {

class pack_search {
public:
    pack_search(const Multigraph& g, int k, long long budget)
        : n_(g.vertex_count()), cap_(k), budget_(budget) {
        adj_.assign(n_, 0);
        strong_.assign(n_, 0);
        for (auto [u, v, m] : g.edges()) {
            adj_[u] |= bit(v);
            adj_[v] |= bit(u);
            if (m >= 2) {
                strong_[u] |= bit(v);
                strong_[v] |= bit(u);
            }
        }
        loops_ = 0;
        for (Vertex v = 0; v < n_; ++v)
            if (g.loop_count(v) > 0) loops_ |= bit(v);
        full_ = n_ == 0 ? 0 : (n_ == 64 ? ~0ULL : (1ULL << n_) - 1);
    }

    bool aborted() const { return aborted_; }
    long long spent() const { return spent_; }

    // Extraction re-asks questions the successful search already answered;
    // it must not trip the budget line partway through a certificate.
    void lift_budget() { budget_ = std::numeric_limits<long long>::max(); }

    // min(max disjoint cycles in induced subgraph, cap)
    int nu(std::uint64_t mask) {
        if (mask == 0 || aborted_) return 0;
        auto it = memo_.find(mask);
        if (it != memo_.end()) return it->second;
        if (!tick()) return 0;

        int result = 0;
        std::uint64_t loop_part = mask & loops_;
        if (loop_part) {
            result = std::min(cap_, std::popcount(loop_part) + nu(mask & ~loop_part));
        } else {
            int ub = upper_bound(mask);
            if (ub > 0) {
                int v = std::countr_zero(mask);
                std::uint64_t without_v = mask & ~bit(v);
                // strong 2-cycles through v first
                std::uint64_t sn = strong_[v] & mask;
                while (sn && result < ub && !aborted_) {
                    int u = std::countr_zero(sn);
                    sn &= sn - 1;
                    result = std::max(result, std::min(cap_, 1 + nu(without_v & ~bit(u))));
                }
                if (result < ub && !aborted_) {
                    for (const auto& c : chordless_cycles_through(v, mask)) {
                        std::uint64_t cmask = 0;
                        for (Vertex x : c) cmask |= bit(x);
                        result = std::max(result, std::min(cap_, 1 + nu(mask & ~cmask)));
                        if (result >= ub || aborted_) break;
                    }
                }
                // leave v uncovered
                if (result < ub && !aborted_) result = std::max(result, nu(without_v));
            }
        }
        if (!aborted_) memo_.emplace(mask, result);
        return result;
    }

    // Rebuild one packing of `need` cycles; only called after nu proved it
    // exists, so every branch query is answerable from the memo or cheap to
    // recompute.
    void extract(std::uint64_t mask, int need, std::vector<std::vector<Vertex>>& out) {
        while (need > 0) {
            assert(mask != 0);
            std::uint64_t loop_part = mask & loops_;
            if (loop_part) {
                while (loop_part && need > 0) {
                    int v = std::countr_zero(loop_part);
                    loop_part &= loop_part - 1;
                    out.push_back({v});
                    --need;
                }
                mask &= ~(mask & loops_);
                continue;
            }
            int v = std::countr_zero(mask);
            std::uint64_t without_v = mask & ~bit(v);
            bool advanced = false;
            std::uint64_t sn = strong_[v] & mask;
            while (sn) {
                int u = std::countr_zero(sn);
                sn &= sn - 1;
                if (1 + nu(without_v & ~bit(u)) >= need) {
                    out.push_back({v, u});
                    mask = without_v & ~bit(u);
                    --need;
                    advanced = true;
                    break;
                }
            }
            if (advanced) continue;
            for (const auto& c : chordless_cycles_through(v, mask)) {
                std::uint64_t cmask = 0;
                for (Vertex x : c) cmask |= bit(x);
                if (1 + nu(mask & ~cmask) >= need) {
                    out.push_back(c);
                    mask &= ~cmask;
                    --need;
                    advanced = true;
                    break;
                }
            }
            if (advanced) continue;
            assert(nu(without_v) >= need);
            mask = without_v;
        }
    }

    std::uint64_t full_mask() const { return full_; }

private:
    static std::uint64_t bit(int v) { return 1ULL << v; }

    bool tick() {
        ++spent_;
        if (spent_ > budget_) {
            aborted_ = true;
            return false;
        }
        return true;
    }

    // 2-cycles cost 2 vertices and need strong-incident endpoints; anything
    // longer costs at least 3.
    int upper_bound(std::uint64_t mask) const {
        int t = std::popcount(mask);
        int sv = 0;
        std::uint64_t m = mask;
        while (m) {
            int v = std::countr_zero(m);
            m &= m - 1;
            if (strong_[v] & mask) ++sv;
        }
        int c2 = sv / 2;
        return std::min(cap_, c2 + (t - 2 * c2) / 3);
    }

    // All chordless cycles of length >= 3 through v inside mask, sorted by
    // (length, sequence). v is the least vertex of mask, so canonical form
    // starts at v; direction fixed by requiring second vertex < last.
    std::vector<std::vector<Vertex>> chordless_cycles_through(int v, std::uint64_t mask) {
        std::vector<std::vector<Vertex>> found;
        std::vector<Vertex> path{v};
        dfs_chordless(v, mask, path, bit(v), found);
        std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
            if (a.size() != b.size()) return a.size() < b.size();
            return a < b;
        });
        return found;
    }

    void dfs_chordless(int v, std::uint64_t mask, std::vector<Vertex>& path, std::uint64_t path_mask,
                       std::vector<std::vector<Vertex>>& found) {
        if (aborted_) return;
        int tail = path.back();
        std::uint64_t cand = adj_[tail] & mask & ~path_mask;
        while (cand) {
            int w = std::countr_zero(cand);
            cand &= cand - 1;
            if (!tick()) return;
            std::uint64_t back = adj_[w] & path_mask;
            if (back == (bit(tail) | bit(v)) && path.size() >= 2) {
                // closes a chordless cycle; canonical direction only
                if (path[1] < w) {
                    found.push_back(path);
                    found.back().push_back(w);
                }
            } else if (back == bit(tail)) {
                path.push_back(w);
                dfs_chordless(v, mask, path, path_mask | bit(w), found);
                path.pop_back();
            }
        }
    }

    int n_;
    int cap_;
    long long budget_;
    long long spent_ = 0;
    bool aborted_ = false;
    std::vector<std::uint64_t> adj_, strong_;
    std::uint64_t loops_ = 0;
    std::uint64_t full_ = 0;
    std::unordered_map<std::uint64_t, int> memo_;
};

}  // namespace detail

inline PackResult find_disjoint_cycles(const Multigraph& g, int k,
                                       long long budget = pack_default_budget) {
    if (k < 1) throw std::invalid_argument("find_disjoint_cycles: k must be positive");
    PackResult res;
    if (g.vertex_count() > 62) {  // subset masks; larger graphs exceed the exact oracle's scope
        res.status = PackStatus::Unknown;
        return res;
    }
    detail::pack_search search(g, k, budget);
    int got = search.nu(search.full_mask());
    res.expansions = search.spent();
    if (search.aborted()) {
        res.status = PackStatus::Unknown;
        return res;
    }
    if (got < k) {
        res.status = PackStatus::Absent;
        return res;
    }
    search.lift_budget();
    search.extract(search.full_mask(), k, res.packing.cycles);
    std::sort(res.packing.cycles.begin(), res.packing.cycles.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    res.status = PackStatus::Found;
    assert(verify_packing(g, k, res.packing));
    return res;
}

}  // namespace cyclepack
