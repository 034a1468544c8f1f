#include <cyclepack/format.hpp>
#include <cyclepack/gen.hpp>
#include <cyclepack/graph.hpp>
#include <cyclepack/matching.hpp>
#include <doctest.h>

#include "testutil.hpp"

using namespace cyclepack;
using namespace testutil;

TEST_CASE("loop_vertices picks up loop incidence, not counts") {
    CHECK(loop_vertices(complete_multigraph(4)).empty());

    Multigraph g = with_loop(complete_multigraph(4), 0);
    CHECK(loop_vertices(g) == VertexSet{0});

    Multigraph h(6);
    h.add_loop(3, 2);
    h.add_loop(5);
    CHECK(loop_vertices(h) == VertexSet{3, 5});
}

TEST_CASE("underlying_simple flattens multiplicities and drops loops") {
    Multigraph g(2);
    g.add_edge(0, 1, 2);
    SimpleGraph u = underlying_simple(g);
    CHECK(u.edge_count() == 1);
    CHECK(u.adjacent(0, 1));

    Multigraph h(2);
    h.add_loop(0);
    h.add_edge(0, 1);
    SimpleGraph uh = underlying_simple(h);
    CHECK(uh.edge_count() == 1);

    // identity on already-simple input
    Multigraph k4 = complete_multigraph(4);
    CHECK(underlying_simple(k4) == underlying_simple(multigraph_from_simple(underlying_simple(k4))));
}

TEST_CASE("strong_edge_graph lives inside G - V1 and exposes |F|") {
    Multigraph g(2);
    g.add_edge(0, 1, 2);
    SimpleGraph f = strong_edge_graph(g);
    CHECK(f.order() == 2);
    CHECK(f.adjacent(0, 1));

    Multigraph h(2);
    h.add_edge(0, 1, 2);
    h.add_loop(0);
    SimpleGraph fh = strong_edge_graph(h);
    CHECK(fh.order() == 0);
    CHECK(fh.edge_count() == 0);

    // two disjoint doubles plus a third double sharing a vertex
    Multigraph fig(5);
    fig.add_edge(0, 1, 2);
    fig.add_edge(2, 3, 2);
    fig.add_edge(3, 4, 2);
    SimpleGraph ff = strong_edge_graph(fig);
    CHECK(ff.order() == 5);
    CHECK(max_matching(ff).size() == 2);
}

TEST_CASE("strong edges never touch loop vertices") {
    Rng rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 3 + static_cast<int>(rng_below(rng, 6));
        Multigraph g(n);
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (rng_chance(rng, 0.5)) g.add_edge(u, v, 1 + static_cast<int>(rng_below(rng, 3)));
        for (Vertex v = 0; v < n; ++v)
            if (rng_chance(rng, 0.3)) g.add_loop(v, 1 + static_cast<int>(rng_below(rng, 2)));
        SimpleGraph f = strong_edge_graph(g);
        for (Vertex v : loop_vertices(g)) {
            CHECK_FALSE(f.is_active(v));
            CHECK(f.degree(v) == 0);
        }
        // simple degree matches the underlying view everywhere
        SimpleGraph u = underlying_simple(g);
        for (Vertex v = 0; v < n; ++v) CHECK(simple_degree(g, v) == u.degree(v));
    }
}

TEST_CASE("simple_degree counts distinct neighbors only") {
    SimpleGraph w5 = wheel_graph(5);
    Multigraph wheel = multigraph_from_simple(w5);
    CHECK(simple_degree(wheel, 0) == 5);

    Multigraph dbl(2);
    dbl.add_edge(0, 1, 2);
    CHECK(simple_degree(dbl, 0) == 1);

    Multigraph lonely(1);
    lonely.add_loop(0, 2);
    CHECK(simple_degree(lonely, 0) == 0);

    CHECK_THROWS_AS(simple_degree(dbl, 5), std::out_of_range);
}

TEST_CASE("in_Dk thresholds") {
    Multigraph k5 = complete_multigraph(5);
    CHECK_FALSE(in_Dk(k5, 3));  // 4 < 5
    CHECK(in_Dk(k5, 2));
    CHECK(in_Dk(multigraph_from_simple(wheel_graph(5)), 2));  // rim degree 3 = 2k-1
}

TEST_CASE("parse handles the documented inputs") {
    Multigraph g = parse_graph("n 2\ne 0 1 2\n");
    CHECK(g.multiplicity(0, 1) == 2);

    Multigraph l = parse_graph("n 1\ne 0 0 1\n");
    CHECK(l.loop_count(0) == 1);

    // duplicate e-lines sum
    Multigraph d = parse_graph("# header\nn 3\ne 0 1 1\ne 1 0 2\n");
    CHECK(d.multiplicity(0, 1) == 3);
}

TEST_CASE("parse errors carry line numbers") {
    CHECK_THROWS_WITH_AS(parse_graph("n 3\ne 0 5 1\n"), "line 2: vertex out of range", ParseError);
    CHECK_THROWS_WITH_AS(parse_graph("n 3\ne 0 1 0\n"), "line 2: multiplicity must be positive",
                         ParseError);
    CHECK_THROWS_AS(parse_graph("e 0 1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("n 2\nz 0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_graph(""), ParseError);
    CHECK_THROWS_AS(parse_graph("n 2\ne 0 1\n"), ParseError);
}

TEST_CASE("serialize is canonical and round-trips exactly") {
    Multigraph g(4);
    g.add_edge(2, 3);
    g.add_edge(0, 3, 2);
    g.add_loop(2, 3);
    g.add_loop(0);
    CHECK(serialize(g) == "n 4\ne 0 0 1\ne 2 2 3\ne 0 3 2\ne 2 3 1\n");

    Rng rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 1 + static_cast<int>(rng_below(rng, 9));
        Multigraph r(n);
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (rng_chance(rng, 0.4)) r.add_edge(u, v, 1 + static_cast<int>(rng_below(rng, 4)));
        for (Vertex v = 0; v < n; ++v)
            if (rng_chance(rng, 0.2)) r.add_loop(v, 1 + static_cast<int>(rng_below(rng, 3)));
        Multigraph back = parse_graph(serialize(r));
        CHECK(back == r);
        CHECK(serialize(back) == serialize(r));
    }
}

TEST_CASE("vertex deletion keeps the id space") {
    SimpleGraph k5 = complete_simple_graph(5);
    SimpleGraph cut = k5.without({1, 3});
    CHECK(cut.id_space() == 5);
    CHECK(cut.order() == 3);
    CHECK(cut.vertices() == VertexSet{0, 2, 4});
    CHECK(cut.adjacent(0, 4));
    CHECK_FALSE(cut.adjacent(0, 1));
    CHECK_FALSE(cut.is_active(3));
}
