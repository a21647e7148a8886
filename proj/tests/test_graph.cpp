#include <doctest.h>

#include "strongdom/graph.hpp"
#include "strongdom/random_graphs.hpp"

using namespace strongdom;

TEST_SUITE("graph_core") {

TEST_CASE("make_graph deduplicates and caches degrees") {
    Graph g = Graph::make(3, {{0, 1}, {1, 2}, {0, 1}});
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.degree(0) == 1);
    CHECK(g.degree(1) == 2);
    CHECK(g.degree(2) == 1);
}

TEST_CASE("single isolated vertex") {
    Graph g = Graph::make(1, {});
    CHECK(g.vertex_count() == 1);
    CHECK(g.edge_count() == 0);
    CHECK(g.degree(0) == 0);
    CHECK(g.label(0) == "v0");
}

TEST_CASE("make_graph rejects bad input") {
    CHECK_THROWS_AS(Graph::make(3, {{0, 3}}), Error);
    CHECK_THROWS_AS(Graph::make(3, {{-1, 0}}), Error);
    CHECK_THROWS_AS(Graph::make(3, {{1, 1}}), Error);
    CHECK_THROWS_AS(Graph::make(2, {}, {"a"}), Error);          // label count
    CHECK_THROWS_AS(Graph::make(2, {}, {"a", "a"}), Error);     // duplicate
    CHECK_THROWS_AS(Graph::make(2, {}, {"a", "b c"}), Error);   // whitespace
    try {
        Graph::make(3, {{2, 2}});
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::self_loop);
    }
}

TEST_CASE("generators have the expected shape") {
    Graph k6 = complete_graph(6);
    CHECK(k6.edge_count() == 15);
    for (int v = 0; v < 6; ++v) CHECK(k6.degree(v) == 5);

    Graph c6 = cycle_graph(6);
    CHECK(c6.edge_count() == 6);
    for (int v = 0; v < 6; ++v) CHECK(c6.degree(v) == 2);

    Graph p5 = path_graph(5);
    CHECK(p5.edge_count() == 4);

    Graph star = star_graph(3);
    CHECK(star.degree(0) == 3);
    CHECK(star.label(0) == "c");
    for (int l = 1; l <= 3; ++l) CHECK(star.degree(l) == 1);

    CHECK_THROWS_AS(cycle_graph(2), Error);
}

TEST_CASE("neighbors") {
    Graph star = star_graph(4);
    CHECK(neighbors(star, 0) == VertexSet::of({1, 2, 3, 4}));
    CHECK(neighbors(star, 1) == VertexSet::of({0}));

    Graph lonely = Graph::make(2, {});
    CHECK(neighbors(lonely, 0).empty());

    Graph c6 = cycle_graph(6);
    CHECK(neighbors(c6, 0) == VertexSet::of({1, 5}));
    CHECK(neighbors(c6, 3) == VertexSet::of({2, 4}));

    CHECK_THROWS_AS(neighbors(c6, 6), Error);
}

TEST_CASE("connectivity and pendant vertices") {
    Graph p5 = path_graph(5);
    CHECK(is_pendant(p5, 0));
    CHECK(is_pendant(p5, 4));
    CHECK_FALSE(is_pendant(p5, 2));
    CHECK(is_connected(p5));

    Graph c4 = cycle_graph(4);
    for (int v = 0; v < 4; ++v) CHECK_FALSE(is_pendant(c4, v));

    Graph two_edges = Graph::make(4, {{0, 1}, {2, 3}});
    CHECK_FALSE(is_connected(two_edges));

    CHECK(is_connected(Graph::make(1, {})));
    CHECK(is_connected(Graph::make(0, {})));
    CHECK_FALSE(is_connected(Graph::make(2, {})));
}

TEST_CASE("handshake and neighbor symmetry on random graphs") {
    Rng rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = erdos_renyi(rng, uniform_int(rng, 1, 12), pick_density(rng));
        int degree_sum = 0;
        for (int v = 0; v < g.vertex_count(); ++v) degree_sum += g.degree(v);
        CHECK(degree_sum == 2 * g.edge_count());
        for (int a = 0; a < g.vertex_count(); ++a)
            for (int b : g.adjacent(a)) {
                CHECK(neighbors(g, b).contains(a));
                CHECK(b != a);
            }
    }
}

TEST_CASE("vertex set lexicographic order") {
    CHECK(lex_less(VertexSet::of({0, 5}), VertexSet::of({1, 2})));
    CHECK(lex_less(VertexSet::of({0, 2}), VertexSet::of({0, 5})));
    CHECK(lex_less(VertexSet::of({0}), VertexSet::of({0, 2})));
    CHECK_FALSE(lex_less(VertexSet::of({0, 2}), VertexSet::of({0})));
    CHECK_FALSE(lex_less(VertexSet::of({1, 3}), VertexSet::of({1, 3})));
}

} // TEST_SUITE
