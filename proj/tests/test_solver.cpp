#include <doctest.h>

#include <vector>

#include "strongdom/random_graphs.hpp"
#include "strongdom/solver.hpp"

using namespace strongdom;

namespace {

// Independent check used at small n: every subset, no pruning, no ordering
// tricks.
std::vector<VertexSet> all_optimal_strong_sets(const Graph& g) {
    int n = g.vertex_count();
    int best = n + 1;
    std::vector<VertexSet> optima;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        VertexSet d(mask);
        if (!is_strong_dominating(g, d)) continue;
        if (d.count() < best) {
            best = d.count();
            optima.clear();
        }
        if (d.count() == best) optima.push_back(d);
    }
    return optima;
}

} // namespace

TEST_SUITE("strongdom_solver") {

TEST_CASE("domination predicates on the standard small cases") {
    Graph star = star_graph(3);
    CHECK(is_dominating(star, VertexSet::of({0})));
    CHECK_FALSE(is_dominating(star, VertexSet::of({1})));
    CHECK(is_dominating(star, VertexSet::full(4)));

    CHECK(is_strong_dominating(star, VertexSet::of({0})));
    Graph p3 = path_graph(3);
    CHECK_FALSE(is_strong_dominating(p3, VertexSet::of({0})));
    Graph k6 = complete_graph(6);
    CHECK(is_strong_dominating(k6, VertexSet::of({2})));

    CHECK_FALSE(is_weak_dominating(star, VertexSet::of({1})));
    CHECK(is_weak_dominating(star, VertexSet::of({1, 2, 3})));
    CHECK(is_weak_dominating(k6, VertexSet::of({0})));

    CHECK_THROWS_AS(is_dominating(p3, VertexSet::of({3})), Error);
}

TEST_CASE("forced vertices") {
    CHECK(forced_vertices(star_graph(3)) == VertexSet::of({0}));
    CHECK(forced_vertices(cycle_graph(6)).empty());
    // Isolated vertices can never be dominated from outside.
    Graph g = Graph::make(4, {{0, 1}});
    CHECK(forced_vertices(g) == VertexSet::of({2, 3}));
}

TEST_CASE("brute force on fixed instances") {
    SolveResult k6 = gamma_st_bruteforce(complete_graph(6));
    CHECK(k6.optimum == 1);
    CHECK(k6.witness == VertexSet::of({0}));

    SolveResult c6 = gamma_st_bruteforce(cycle_graph(6));
    CHECK(c6.optimum == 2);
    CHECK(c6.witness == VertexSet::of({0, 3}));

    SolveResult p4 = gamma_st_bruteforce(path_graph(4));
    CHECK(p4.optimum == 2);
    CHECK(p4.witness == VertexSet::of({0, 2}));
}

TEST_CASE("brute force guards") {
    CHECK_THROWS_AS(gamma_st_bruteforce(path_graph(30)), Error);

    // The limit is an argument, not a constant baked into the oracle.
    Graph p10 = path_graph(10);
    CHECK_THROWS_AS(gamma_st_bruteforce(p10, {}, 5), Error);
    CHECK(gamma_st_bruteforce(p10, {}, 10).optimum == 4);

    try {
        gamma_st_bruteforce(cycle_graph(6), 1);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::no_set_within_cap);
    }
}

TEST_CASE("exact solver on fixed instances") {
    Graph p10 = path_graph(10);
    CHECK(gamma_st_exact(p10).optimum == gamma_st_bruteforce(p10).optimum);

    SolveResult k20 = gamma_st_exact(complete_graph(20));
    CHECK(k20.optimum == 1);
    CHECK(k20.method == SolveMethod::branch_and_bound);

    CHECK(gamma_st_exact(Graph::make(0, {})).optimum == 0);
    CHECK(gamma_st_exact(Graph::make(1, {})).optimum == 1);
}

TEST_CASE("plain and weak domination numbers") {
    Graph k6 = complete_graph(6);
    CHECK(gamma_plain(k6).optimum == 1);
    CHECK(gamma_w(k6).optimum == 1);

    Graph star = star_graph(3);
    CHECK(gamma_plain(star).optimum == 1);
    CHECK(gamma_w(star).optimum == 3);
    CHECK(gamma_w(star).witness == VertexSet::of({1, 2, 3}));
    CHECK(gamma_st_bruteforce(star).optimum == 1);

    Graph c6 = cycle_graph(6);
    CHECK(gamma_plain(c6).optimum == 2);
    CHECK(gamma_st_bruteforce(c6).optimum == 2);
    CHECK(gamma_w(c6).optimum == 2);
}

TEST_CASE("greedy upper bound is always a valid strong dominating set") {
    CHECK(greedy_upper_bound(complete_graph(6)).count() == 1);
    CHECK(greedy_upper_bound(star_graph(3)) == VertexSet::of({0}));

    VertexSet c6 = greedy_upper_bound(cycle_graph(6));
    CHECK(c6.count() <= 3);
    CHECK(is_strong_dominating(cycle_graph(6), c6));

    Rng rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = erdos_renyi(rng, uniform_int(rng, 0, 14), pick_density(rng));
        VertexSet d = greedy_upper_bound(g);
        CHECK(is_strong_dominating(g, d));
        CHECK(d.count() >= gamma_st_exact(g).optimum);
    }
}

TEST_CASE("exact matches brute force with identical witnesses") {
    Rng rng(12345);
    for (int trial = 0; trial < 120; ++trial) {
        Graph g = erdos_renyi(rng, uniform_int(rng, 1, 10), pick_density(rng));
        SolveResult brute = gamma_st_bruteforce(g);
        SolveResult exact = gamma_st_exact(g);
        REQUIRE(brute.optimum == exact.optimum);
        REQUIRE(brute.witness == exact.witness); // shared lex-smallest contract
        CHECK(is_strong_dominating(g, exact.witness));
    }
}

TEST_CASE("forced vertices sit inside every optimal set") {
    Rng rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = erdos_renyi(rng, uniform_int(rng, 1, 8), pick_density(rng));
        VertexSet forced = forced_vertices(g);
        for (const VertexSet& opt : all_optimal_strong_sets(g)) CHECK(forced.subset_of(opt));
        CHECK(forced.subset_of(gamma_st_exact(g).witness));
    }
}

TEST_CASE("domination number orderings") {
    Rng rng(4242);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = erdos_renyi(rng, uniform_int(rng, 1, 9), pick_density(rng));
        int plain = gamma_plain(g).optimum;
        int strong = gamma_st_bruteforce(g).optimum;
        int weak = gamma_w(g).optimum;
        CHECK(plain <= strong);
        CHECK(plain <= weak);
        CHECK(strong <= g.vertex_count());
        CHECK(is_strong_dominating(g, VertexSet::full(g.vertex_count())));
    }
}

TEST_CASE("weak/strong inequality of connected graphs") {
    // gamma_w + 3/(max_degree+1) * gamma_st <= n, checked in integers.
    Rng rng(31337);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = random_connected_graph(rng, uniform_int(rng, 3, 9), pick_density(rng));
        long long weak = gamma_w(g).optimum;
        long long strong = gamma_st_exact(g).optimum;
        long long dmax = g.max_degree();
        CHECK(weak * (dmax + 1) + 3 * strong <= static_cast<long long>(g.vertex_count()) * (dmax + 1));
    }
}

} // TEST_SUITE
