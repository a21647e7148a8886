#pragma once

#include <cstdint>
#include <optional>

#include "strongdom/graph.hpp"
#include "strongdom/vertex_set.hpp"

namespace strongdom {

enum class SolveMethod { brute_force, branch_and_bound };

struct SolveResult {
    int optimum = 0;
    VertexSet witness;
    std::uint64_t nodes_explored = 0;
    SolveMethod method = SolveMethod::brute_force;
};

// Subset enumeration cap for the brute-force oracles. Overridable per call
// (and via --oracle-limit / STRONGDOM_ORACLE_LIMIT on the CLI).
inline constexpr int kDefaultOracleLimit = 26;

bool is_dominating(const Graph& g, VertexSet d);

// Every x outside d has a neighbor y in d with deg(y) >= deg(x).
bool is_strong_dominating(const Graph& g, VertexSet d);

// Mirror of strong with the inequality reversed: deg(y) <= deg(x).
bool is_weak_dominating(const Graph& g, VertexSet d);

// Vertices no neighbor can strong-dominate (local strict degree maxima and
// isolated vertices). These belong to every strong dominating set.
VertexSet forced_vertices(const Graph& g);

// Exact gamma_st by subset enumeration in increasing cardinality, forced
// vertices pre-included, remaining vertices in id order. The first hit is
// both optimal and the lexicographically smallest optimal witness.
SolveResult gamma_st_bruteforce(const Graph& g, std::optional<int> size_cap = {},
                                int oracle_limit = kDefaultOracleLimit);

// Exact gamma_st by branch and bound: seeded with forced vertices, branches
// over an uncovered vertex's feasible strong-dominators, prunes with the
// greedy upper bound and a lower bound from a maximal packing of vertices
// with pairwise-disjoint closed dominator sets. A second, budget-exact pass
// recovers the lexicographically smallest optimal witness, so results are
// id-for-id identical with gamma_st_bruteforce.
SolveResult gamma_st_exact(const Graph& g);

// Plain and weak domination numbers (brute force; meant for property tests
// and audits at small n).
SolveResult gamma_plain(const Graph& g, int oracle_limit = kDefaultOracleLimit);
SolveResult gamma_w(const Graph& g, int oracle_limit = kDefaultOracleLimit);

// Valid (not necessarily optimal) strong dominating set: repeatedly take the
// vertex covering the most still-uncovered vertices, ties broken by higher
// degree then lower id.
VertexSet greedy_upper_bound(const Graph& g);

} // namespace strongdom
