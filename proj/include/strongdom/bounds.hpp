#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "strongdom/ops.hpp"
#include "strongdom/solver.hpp"

namespace strongdom {

enum class TightSide { none, lower, upper, both };

const char* tight_side_name(TightSide side);

// One evaluated bound instance: the lower/upper bound values next to the
// exact gamma_st of the fusion. Lower bounds can be negative; they are
// reported as stated, never clamped. holds <=> lower <= exact <= upper.
struct BoundReport {
    std::string instance;
    std::vector<int> part_gamma;
    std::vector<int> part_degree; // deg(x_i) resp. deg(u_i) in the parts
    long long lower = 0;
    long long upper = 0;
    long long exact = 0;
    bool holds = false;
    TightSide tight = TightSide::none;
    std::uint64_t nodes_explored = 0;
};

// gamma_st(G1) + gamma_st(G2) - deg(x1) - deg(x2) + 2
//     <= gamma_st(fusion) <= gamma_st(G1) + gamma_st(G2) + 1.
// Requires non-pendant x1 and x2 (HypothesisViolated otherwise). Part
// gamma_st values come from the exact solver, never the greedy bound.
BoundReport check_hajos_bounds(const HajosSpec& spec);

// sum_i (gamma_st(G_i) - deg(u_i)) + 1 <= gamma_st(fusion)
//     <= sum_i gamma_st(G_i) + 1.
BoundReport check_vsum_bounds(const VertexSumSpec& spec);

// Specialization to t copies of one graph at one vertex:
// t*(gamma_st(G) - deg(u)) + 1 <= gamma_st(fusion) <= t*gamma_st(G) + 1.
BoundReport check_copies_bounds(const Graph& g, VertexId u, int t);

struct HajosReplay {
    FusionResult fusion;
    VertexSet dominating_set;
    int proof_case = 0; // 1..6, first matching case in the fixed order
};

// Replays the constructive upper-bound argument for the Hajos sum: given
// strong dominating sets d1, d2 of the parts, classifies the instance by
// whether y_i is strong dominated by x_i under d_i (and conversely), then
// emits the corresponding fused set through the origin map. The result is a
// strong dominating set of the fusion of size <= |d1| + |d2| + 1, and of
// size <= |d1| + |d2| when case 1 applies. Requires non-pendant x1, x2.
HajosReplay replay_hajos_upper_construction(const HajosSpec& spec, VertexSet d1, VertexSet d2);

struct VsumReplay {
    FusionResult fusion;
    VertexSet dominating_set;
};

// Union of the mapped part sets plus the central vertex; always a strong
// dominating set of the fusion, of size <= sum |d_i| + 1.
VsumReplay replay_vsum_upper_construction(const VertexSumSpec& spec,
                                          const std::vector<VertexSet>& part_sets);

} // namespace strongdom
