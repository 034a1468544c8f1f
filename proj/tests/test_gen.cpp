#include <cyclepack/classify.hpp>
#include <cyclepack/format.hpp>
#include <cyclepack/gen.hpp>
#include <cyclepack/pack.hpp>
#include <doctest.h>

#include "testutil.hpp"

using namespace cyclepack;
using namespace testutil;

namespace {

bool fires(const Multigraph& g, int k, BlockerTag tag) {
    auto bs = blockers(g, k);
    return std::any_of(bs.begin(), bs.end(), [&](const Blocker& b) { return b.tag == tag; });
}

}  // namespace

TEST_CASE("y_graph shapes") {
    SimpleGraph y34 = y_graph(3, 4);
    CHECK(y34.order() == 11);
    for (Vertex v = 0; v < 3; ++v) CHECK(y34.degree(v) == 8);
    for (Vertex v = 3; v < 11; ++v) CHECK(y34.degree(v) == 6);

    SimpleGraph y21 = y_graph(2, 1);
    CHECK(is_cycle(y21, y21.vertices()));  // C4

    SimpleGraph y02 = y_graph(0, 2);
    CHECK(y02.edge_count() == 2);
    CHECK(y02.degree(0) == 1);

    CHECK_THROWS_AS(y_graph(-1, 2), std::invalid_argument);
    CHECK_THROWS_AS(y_graph(2, 0), std::invalid_argument);
}

TEST_CASE("each family fires its own condition") {
    struct Probe {
        FamilySpec spec;
        BlockerTag tag;
    };
    std::vector<Probe> probes{
        {{.cls = FamilyClass::A, .k = 3, .alpha_prime = 1, .n = 7, .seed = 1}, BlockerTag::A},
        {{.cls = FamilyClass::B_I, .k_prime = 3, .alpha_prime = 2, .seed = 2}, BlockerTag::B_I},
        {{.cls = FamilyClass::B_II, .k = 4, .seed = 3}, BlockerTag::B_II},
        {{.cls = FamilyClass::C_I, .k = 2, .n = 7, .strong_count = 1, .seed = 4}, BlockerTag::C_I},
        {{.cls = FamilyClass::C_II, .k = 3, .n = 8, .strong_count = 3, .seed = 5}, BlockerTag::C_II},
        {{.cls = FamilyClass::D_I, .k_prime = 3, .alpha_prime = 2, .leaves = 2, .seed = 6},
         BlockerTag::D_I},
        {{.cls = FamilyClass::D_II, .k_prime = 3, .alpha_prime = 2, .seed = 7}, BlockerTag::D_II},
        {{.cls = FamilyClass::E, .rim = 6, .strong_count = 6, .seed = 8}, BlockerTag::E},
        {{.cls = FamilyClass::F, .alpha_prime = 2, .seed = 9}, BlockerTag::F},
    };
    for (const Probe& p : probes) {
        Multigraph g = make_family(p.spec);
        int k = family_k(p.spec);
        CAPTURE(family_class_name(p.spec.cls));
        CHECK(in_Dk(g, k));
        CHECK_FALSE(g.has_loops());
        CHECK(fires(g, k, p.tag));
        for (const Blocker& b : blockers(g, k)) CHECK(validate_blocker(g, k, b));
    }
}

TEST_CASE("figure-style instances fire exactly their own condition") {
    auto tags = [](const Multigraph& g, int k) {
        std::vector<BlockerTag> out;
        for (const Blocker& b : blockers(g, k)) out.push_back(b.tag);
        return out;
    };

    // (b)(i) anchor: Y_{3,3} core with two strong pairs, k = 5
    Multigraph b1 = make_family(FamilySpec{.cls = FamilyClass::B_I, .k_prime = 3, .alpha_prime = 2});
    CHECK(tags(b1, 5) == std::vector<BlockerTag>{BlockerTag::B_I});

    // (d)(ii) anchor at k = 5
    Multigraph d2 = make_family(FamilySpec{.cls = FamilyClass::D_II, .k_prime = 3, .alpha_prime = 2});
    CHECK(tags(d2, 5) == std::vector<BlockerTag>{BlockerTag::D_II});

    // (e) anchor: all-strong-spoke wheel at k = 2
    Multigraph e = make_family(FamilySpec{.cls = FamilyClass::E, .rim = 6, .strong_count = 6});
    CHECK(tags(e, 2) == std::vector<BlockerTag>{BlockerTag::E});

    // (f) anchor: alpha' = 2, k = 4, |F| = 5
    Multigraph f = make_family(FamilySpec{.cls = FamilyClass::F, .alpha_prime = 2});
    SimpleGraph sf = strong_edge_graph(f);
    CHECK(sf.order() == 5);
    CHECK(max_matching(sf).size() == 2);
    CHECK(tags(f, 4) == std::vector<BlockerTag>{BlockerTag::F});

    // (c)(ii) with both big sets touched by the strong star: C_I must not fire
    Multigraph c2 = make_family(
        FamilySpec{.cls = FamilyClass::C_II, .k = 3, .n = 8, .strong_count = 4, .seed = 2});
    CHECK(tags(c2, 3) == std::vector<BlockerTag>{BlockerTag::C_II});

    // a lighter star leaves the second big set clean: both C conditions hold
    Multigraph c1 = make_family(
        FamilySpec{.cls = FamilyClass::C_II, .k = 3, .n = 8, .strong_count = 3, .seed = 2});
    CHECK(tags(c1, 3) == std::vector<BlockerTag>{BlockerTag::C_I, BlockerTag::C_II});
}

TEST_CASE("invalid family parameters name the violated range") {
    CHECK_THROWS_WITH_AS(
        make_family(FamilySpec{.cls = FamilyClass::A, .k = 3, .alpha_prime = 0, .n = 9}),
        "make_family(A): requires n + alpha_prime < 3k", std::invalid_argument);
    CHECK_THROWS_AS(make_family(FamilySpec{.cls = FamilyClass::B_I, .k_prime = 2, .alpha_prime = 1}),
                    std::invalid_argument);
    CHECK_THROWS_AS(make_family(FamilySpec{.cls = FamilyClass::B_II, .k = 2}), std::invalid_argument);
    CHECK_THROWS_AS(make_family(FamilySpec{.cls = FamilyClass::C_II, .k = 2, .n = 6}),
                    std::invalid_argument);  // n > 4k-3
    CHECK_THROWS_AS(make_family(FamilySpec{.cls = FamilyClass::D_I, .k_prime = 3, .alpha_prime = 0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        make_family(FamilySpec{.cls = FamilyClass::D_I, .k_prime = 3, .alpha_prime = 1, .leaves = 5}),
        std::invalid_argument);
    CHECK_THROWS_AS(make_family(FamilySpec{.cls = FamilyClass::E, .rim = 2}), std::invalid_argument);
    CHECK_THROWS_AS(make_family(FamilySpec{.cls = FamilyClass::F, .alpha_prime = 0}),
                    std::invalid_argument);
}

TEST_CASE("B_I tightness: one extra X0 edge flips the verdict") {
    // alpha' = 0, k' = 3: the graph is Y_{3,3} itself
    FamilySpec spec{.cls = FamilyClass::B_I, .k_prime = 3, .alpha_prime = 0, .seed = 0};
    Multigraph g = make_family(spec);
    CHECK(decide(g, 3).verdict == Verdict::Blocked);
    CHECK(find_disjoint_cycles(g, 3).status == PackStatus::Absent);

    // seed 0 keeps canonical labels: X0 = {0,1,2}
    Rng rng(0);
    std::vector<Vertex> perm{0, 1, 2, 3, 4, 5, 6, 7, 8};
    rng_shuffle(rng, perm);
    Multigraph plus = g;
    plus.add_edge(perm[0], perm[1]);
    CHECK(decide(plus, 3).verdict == Verdict::Packable);
    CHECK(find_disjoint_cycles(plus, 3).status == PackStatus::Found);
}

TEST_CASE("even Y_{k,k} is packable") {
    Multigraph y22 = multigraph_from_simple(y_graph(2, 2));
    CHECK(decide(y22, 2).verdict == Verdict::Packable);
    CHECK(find_disjoint_cycles(y22, 2).status == PackStatus::Found);
}

TEST_CASE("random D_k generator postconditions") {
    Rng seeds(1234);
    for (int trial = 0; trial < 60; ++trial) {
        int k = 1 + static_cast<int>(rng_below(seeds, 3));
        int n = 2 * k + static_cast<int>(rng_below(seeds, 6));
        Multigraph g = random_multigraph_in_Dk(n, k, 0.4, seeds());
        CHECK(in_Dk(g, k));
        CHECK_FALSE(g.has_loops());
        for (auto [u, v, m] : g.edges()) CHECK(m <= 2);
    }
    // forced complete graph at n = 2k
    Multigraph forced = random_multigraph_in_Dk(6, 3, 0.0, 9);
    CHECK(underlying_simple(forced) == complete_simple_graph(6));

    CHECK_THROWS_AS(random_multigraph_in_Dk(5, 3, 0.0, 1), std::invalid_argument);
}

TEST_CASE("family instances stay oracle-consistent under single-edge mutation") {
    std::vector<FamilySpec> specs{
        {.cls = FamilyClass::A, .k = 3, .alpha_prime = 1, .n = 7, .seed = 1},
        {.cls = FamilyClass::B_I, .k_prime = 1, .alpha_prime = 2, .seed = 2},
        {.cls = FamilyClass::B_I, .k_prime = 3, .alpha_prime = 1, .seed = 3},
        {.cls = FamilyClass::B_II, .k = 3, .seed = 4},
        {.cls = FamilyClass::C_I, .k = 2, .n = 7, .strong_count = 1, .seed = 5},
        {.cls = FamilyClass::C_II, .k = 3, .n = 8, .strong_count = 2, .seed = 6},
        {.cls = FamilyClass::D_I, .k_prime = 1, .alpha_prime = 2, .leaves = 1, .seed = 7},
        {.cls = FamilyClass::D_I, .k_prime = 3, .alpha_prime = 1, .leaves = 2, .seed = 8},
        {.cls = FamilyClass::D_II, .k_prime = 1, .alpha_prime = 2, .seed = 9},
        {.cls = FamilyClass::D_II, .k_prime = 3, .alpha_prime = 1, .seed = 10},
        {.cls = FamilyClass::E, .rim = 7, .strong_count = 3, .seed = 11},
        {.cls = FamilyClass::F, .alpha_prime = 1, .seed = 12},
        {.cls = FamilyClass::F, .alpha_prime = 2, .seed = 13},
    };
    Rng rng(606);
    for (const FamilySpec& spec : specs) {
        Multigraph g = make_family(spec);
        int k = family_k(spec);
        int n = g.vertex_count();
        CAPTURE(family_class_name(spec.cls));
        for (int trial = 0; trial < 12; ++trial) {
            Vertex u = static_cast<Vertex>(rng_below(rng, static_cast<std::uint64_t>(n)));
            Vertex v = static_cast<Vertex>(rng_below(rng, static_cast<std::uint64_t>(n)));
            if (u == v) continue;
            Multigraph mutated =
                rng_chance(rng, 0.5) ? with_extra_edge(g, u, v) : with_edge_decrement(g, u, v);
            if (!in_Dk(mutated, k)) continue;
            if (mutated.has_loops()) continue;
            Decision d = decide(mutated, k);
            PackResult pr = find_disjoint_cycles(mutated, k);
            REQUIRE(pr.status != PackStatus::Unknown);
            CHECK((d.verdict == Verdict::Packable) == (pr.status == PackStatus::Found));
            for (const Blocker& b : d.blockers) CHECK(validate_blocker(mutated, k, b));
        }
    }
}

TEST_CASE("seeded determinism, seed sensitivity") {
    FamilySpec spec{.cls = FamilyClass::C_I, .k = 3, .n = 9, .strong_count = 2, .seed = 42};
    CHECK(serialize(make_family(spec)) == serialize(make_family(spec)));
    FamilySpec other = spec;
    other.seed = 43;
    CHECK(serialize(make_family(spec)) != serialize(make_family(other)));

    CHECK(serialize(random_multigraph_in_Dk(8, 2, 0.5, 7)) ==
          serialize(random_multigraph_in_Dk(8, 2, 0.5, 7)));
}
