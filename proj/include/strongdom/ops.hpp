#pragma once

#include <vector>

#include "strongdom/graph.hpp"
#include "strongdom/vertex_set.hpp"

namespace strongdom {

// Identification data for a Hajos sum: delete x1y1 and x2y2, merge x1 with
// x2 into a single vertex, add the edge y1y2. Both edges must be present.
struct HajosSpec {
    Graph g1;
    Graph g2;
    VertexId x1 = 0;
    VertexId y1 = 0;
    VertexId x2 = 0;
    VertexId y2 = 0;
};

struct VertexSumPart {
    Graph graph;
    VertexId center = 0;
};

// k >= 2 graphs glued at one chosen vertex each.
struct VertexSumSpec {
    std::vector<VertexSumPart> parts;
};

// A fused graph plus the provenance needed to replay set constructions:
// origin_map[part][old_id] is the id in the result. All identified vertices
// map to fused_vertex. Part 0 keeps its ids (the fused vertex takes the
// smallest freed id, which is part 0's identified vertex); later parts are
// packed densely after it in original id order.
struct FusionResult {
    Graph graph;
    VertexId fused_vertex = 0;
    std::vector<std::vector<VertexId>> origin_map;

    VertexId map(int part, VertexId v) const { return origin_map.at(part).at(v); }
    VertexSet map_set(int part, VertexSet s) const;
};

FusionResult hajos_sum(const HajosSpec& spec);
FusionResult vertex_sum(const VertexSumSpec& spec);
FusionResult vertex_sum_copies(const Graph& g, VertexId u, int t); // t >= 2

} // namespace strongdom
