#pragma once

#include "strongdom/ops.hpp"

namespace strongdom {

// Parametric instance families on which one side of a fusion bound is known
// to be attained with equality. Tightness is never assumed by the
// generators; tests confirm it against the exact solver.

// The classic worked example: K6 and C6 fused along their lowest-id edges.
HajosSpec k6_c6_instance();

// Two copies of an 8-vertex graph whose Hajos sum attains the upper bound
// gamma_st(G1) + gamma_st(G2) + 1. Each part: x adjacent to y and to a
// 3-vertex spine path, every spine vertex carries one pendant leaf, and the
// middle spine vertex is also adjacent to y. gamma_st(part) = 3 (the spine).
HajosSpec hajos_upper_family();
Graph hajos_upper_part();

// Mechanism for lower-bound equality of the Hajos sum. Per part: x is
// adjacent to y and to `hubs` hub vertices; each hub carries `mids_per_hub`
// degree-2 vertices each with a pendant leaf; y carries `supports` degree-2
// vertices each with a pendant leaf. Fusing makes the merged vertex strong-
// dominate every hub, which cuts exactly deg(x1) + deg(x2) - 2 vertices out
// of the union of the part optima.
struct HajosLowerParams {
    int hubs = 2;         // >= 2
    int mids_per_hub = 3; // hubs < mids_per_hub <= 2*hubs - 1
    int supports = 2;     // >= hubs
};
HajosSpec hajos_lower_family(const HajosLowerParams& params = {});
Graph hajos_lower_part(const HajosLowerParams& params = {});

// Vertex-sum upper-bound family: k copies of a 7-vertex part (central u of
// degree 2 joined to two supports, each support carrying two pendant
// leaves; gamma_st(part) = 2).
VertexSumSpec vsum_upper_family(int k); // k >= 2
Graph vsum_upper_part();

// Vertex-sum lower-bound family: k copies of a part where u is adjacent to
// `hubs` hub vertices, each hub to `mids_per_hub` degree-2 vertices, each of
// those carrying one pendant leaf. gamma_st(part) = hubs*(1 + mids_per_hub),
// deg(u) = hubs. Requires k >= 2, hubs >= 2, mids_per_hub in
// [hubs, ...] and hubs*k > mids_per_hub + 1 so the merged centre
// strong-dominates every hub.
VertexSumSpec vsum_lower_family(int k, int hubs, int mids_per_hub);
Graph vsum_lower_part(int hubs, int mids_per_hub);

} // namespace strongdom
