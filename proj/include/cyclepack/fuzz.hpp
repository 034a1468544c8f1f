#pragma once

// Cross-validation driver: random D_k multigraphs, decide() versus the
// exhaustive packer. Any disagreement (or a packer budget exhaustion) is a
// failure. Trials run sequentially off one seeded stream, so the report is
// byte-stable for a fixed parameter set.

#include <sstream>

#include "classify.hpp"
#include "format.hpp"
#include "gen.hpp"
#include "pack.hpp"
#include "rng.hpp"

namespace cyclepack {

struct FuzzParams {
    int k = 2;
    int n_min = 0;  // 0: derive 2k
    int n_max = 9;
    int trials = 100;
    std::uint64_t seed = 1;
    double strong_density = 0.3;
    double loop_density = 0.0;
    long long budget = pack_default_budget;
};

struct FuzzOutcome {
    int trials = 0;
    int packable = 0;
    int blocked = 0;
    int unknown = 0;
    int mismatches = 0;
    std::string report;

    bool ok() const { return unknown == 0 && mismatches == 0; }
};

inline FuzzOutcome run_fuzz(const FuzzParams& p) {
    if (p.k < 1) throw std::invalid_argument("fuzz: k must be positive");
    int n_min = p.n_min > 0 ? p.n_min : 2 * p.k;
    if (n_min < 2 * p.k) throw std::invalid_argument("fuzz: n_min below 2k cannot stay in D_k");
    if (p.n_max < n_min) throw std::invalid_argument("fuzz: n_max below n_min");

    FuzzOutcome out;
    std::ostringstream report;
    Rng rng(p.seed);
    for (int t = 0; t < p.trials; ++t) {
        int n = n_min + static_cast<int>(rng_below(rng, static_cast<std::uint64_t>(p.n_max - n_min + 1)));
        Multigraph g = random_multigraph_min_degree(rng, n, 2 * p.k - 1, p.strong_density);
        if (p.loop_density > 0) {
            Multigraph with_loops = g;
            for (Vertex v = 0; v < n; ++v)
                if (rng_chance(rng, p.loop_density)) with_loops.add_loop(v);
            g = with_loops;
        }
        ++out.trials;

        Decision d = decide(g, p.k);
        PackResult pr = find_disjoint_cycles(g, p.k, p.budget);

        bool bad = false;
        if (pr.status == PackStatus::Unknown) {
            ++out.unknown;
            report << "unknown trial=" << t << " n=" << n << "\n";
            bad = true;
        } else if (d.verdict == Verdict::Packable && pr.status == PackStatus::Found) {
            ++out.packable;
            if (!verify_packing(g, p.k, pr.packing)) {
                ++out.mismatches;
                report << "invalid-packing trial=" << t << "\n";
                bad = true;
            }
        } else if (d.verdict == Verdict::Blocked && pr.status == PackStatus::Absent) {
            ++out.blocked;
            for (const Blocker& b : d.blockers)
                if (!validate_blocker(g, p.k, b)) {
                    ++out.mismatches;
                    report << "invalid-witness trial=" << t << " tag=" << blocker_tag_name(b.tag) << "\n";
                    bad = true;
                }
        } else {
            ++out.mismatches;
            report << "mismatch trial=" << t << " verdict=" << verdict_name(d.verdict)
                   << " packer=" << (pr.status == PackStatus::Found ? "found" : "absent") << "\n";
            bad = true;
        }
        if (bad) {
            std::istringstream lines(serialize(g));
            std::string line;
            while (std::getline(lines, line)) report << "  " << line << "\n";
        }
    }
    report << "trials=" << out.trials << " packable=" << out.packable << " blocked=" << out.blocked
           << " unknown=" << out.unknown << " mismatches=" << out.mismatches << "\n";
    out.report = report.str();
    return out;
}

}  // namespace cyclepack
