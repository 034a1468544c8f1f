#include <cyclepack/classify.hpp>
#include <cyclepack/gen.hpp>
#include <cyclepack/pack.hpp>
#include <doctest.h>

#include "testutil.hpp"

using namespace cyclepack;
using namespace testutil;

namespace {

// complement(K_{s+t}) joined to (K_{2s} + K_{2t})
Multigraph star_family(int s, int t) {
    int h = s + t;
    int n = h + 2 * s + 2 * t;
    Multigraph g(n);
    for (Vertex a = 0; a < h; ++a)
        for (Vertex b = h; b < n; ++b) g.add_edge(a, b);
    for (Vertex a = h; a < h + 2 * s; ++a)
        for (Vertex b = a + 1; b < h + 2 * s; ++b) g.add_edge(a, b);
    for (Vertex a = h + 2 * s; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b) g.add_edge(a, b);
    return g;
}

}  // namespace

TEST_CASE("verify_packing checks every invariant") {
    Multigraph g = with_loop(complete_multigraph(4), 0);
    CyclePacking ok{{{0}, {1, 2, 3}}};
    CHECK(verify_packing(g, 2, ok));

    CyclePacking shared{{{0, 1, 2}, {2, 3, 0}}};
    CHECK_FALSE(verify_packing(g, 2, shared));

    CyclePacking fake_two{{{0}, {1, 2}}};  // multiplicity 1 pair claimed as 2-cycle
    CHECK_FALSE(verify_packing(g, 2, fake_two));

    CHECK_FALSE(verify_packing(g, 1, ok));  // count mismatch
    CyclePacking no_loop{{{1}, {0, 2, 3}}};
    CHECK_FALSE(verify_packing(g, 2, no_loop));
    CyclePacking non_edge{{{0}, {1, 2, 3, 0}}};  // reuses 0
    CHECK_FALSE(verify_packing(g, 2, non_edge));
}

TEST_CASE("two disjoint triangles in the smallest star-family instance") {
    Multigraph g = star_family(1, 1);  // 6 vertices
    PackResult r = find_disjoint_cycles(g, 2);
    REQUIRE(r.status == PackStatus::Found);
    CHECK(r.packing.cycles.size() == 2);
    for (const auto& c : r.packing.cycles) CHECK(c.size() == 3);
    CHECK(verify_packing(g, 2, r.packing));
}

TEST_CASE("definitive absence on K4 with one doubled edge") {
    Multigraph g = complete_multigraph(4);
    g.add_edge(0, 1);
    CHECK(find_disjoint_cycles(g, 2).status == PackStatus::Absent);
}

TEST_CASE("K6 packs two triangles") {
    PackResult r = find_disjoint_cycles(complete_multigraph(6), 2);
    REQUIRE(r.status == PackStatus::Found);
    CHECK(r.packing.cycles.size() == 2);
    for (const auto& c : r.packing.cycles) CHECK(c.size() == 3);
}

TEST_CASE("loops and strong edges are used as short cycles") {
    Multigraph g(4);
    g.add_loop(0);
    g.add_edge(1, 2, 2);
    g.add_edge(2, 3);
    PackResult r = find_disjoint_cycles(g, 2);
    REQUIRE(r.status == PackStatus::Found);
    CHECK(r.packing.cycles[0] == std::vector<Vertex>{0});
    CHECK(r.packing.cycles[1] == std::vector<Vertex>{1, 2});

    // one more than possible
    CHECK(find_disjoint_cycles(g, 3).status == PackStatus::Absent);
}

TEST_CASE("tiny budget reports Unknown") {
    PackResult r = find_disjoint_cycles(complete_multigraph(12), 4, 5);
    CHECK(r.status == PackStatus::Unknown);
}

TEST_CASE("found packings always verify and are canonically ordered") {
    Rng rng(17);
    for (int trial = 0; trial < 120; ++trial) {
        int k = 1 + static_cast<int>(rng_below(rng, 3));
        int n = std::max(2 * k, 3) + static_cast<int>(rng_below(rng, 5));
        Multigraph g(n);
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (rng_chance(rng, 0.45)) g.add_edge(u, v, rng_chance(rng, 0.25) ? 2 : 1);
        for (Vertex v = 0; v < n; ++v)
            if (rng_chance(rng, 0.15)) g.add_loop(v);
        PackResult r = find_disjoint_cycles(g, k);
        REQUIRE(r.status != PackStatus::Unknown);
        if (r.status == PackStatus::Found) {
            CHECK(verify_packing(g, k, r.packing));
            for (std::size_t i = 1; i < r.packing.cycles.size(); ++i)
                CHECK(r.packing.cycles[i - 1].front() < r.packing.cycles[i].front());
            for (const auto& c : r.packing.cycles)
                if (c.size() >= 3) {
                    CHECK(c.front() == *std::min_element(c.begin(), c.end()));
                    CHECK(c[1] < c.back());  // direction canonicalization
                }
        }
    }
}

TEST_CASE("exhaustive scale: n = 12 within budget") {
    // blocked instance: K12 plus two doubled edges at k=5 (14 < 15)
    Multigraph a = make_family(FamilySpec{.cls = FamilyClass::A,
                                          .k = 5,
                                          .k_prime = 0,
                                          .alpha_prime = 2,
                                          .n = 12,
                                          .rim = 0,
                                          .strong_count = 0,
                                          .leaves = 1,
                                          .extra_r_strong = false,
                                          .seed = 3});
    PackResult r = find_disjoint_cycles(a, 5);
    CHECK(r.status == PackStatus::Absent);

    // packable instance at the same order
    PackResult p = find_disjoint_cycles(complete_multigraph(12), 4);
    REQUIRE(p.status == PackStatus::Found);
    CHECK(verify_packing(complete_multigraph(12), 4, p.packing));
}

TEST_CASE("packer rejects bad arguments") {
    CHECK_THROWS_AS(find_disjoint_cycles(complete_multigraph(3), 0), std::invalid_argument);
    CHECK(find_disjoint_cycles(Multigraph(0), 1).status == PackStatus::Absent);
}
