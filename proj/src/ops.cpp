#include "strongdom/ops.hpp"

#include <set>
#include <string>
#include <vector>

namespace strongdom {

namespace {

// First free name among base, base~1, base~2, ...
std::string unique_label(const std::string& base, std::set<std::string>& used) {
    std::string name = base;
    for (int k = 1; !used.insert(name).second; ++k)
        name = base + "~" + std::to_string(k);
    return name;
}

} // namespace

VertexSet FusionResult::map_set(int part, VertexSet s) const {
    check_set_capacity(graph);
    VertexSet out;
    for (int v : s.to_vector()) out.add(map(part, v));
    return out;
}

FusionResult hajos_sum(const HajosSpec& spec) {
    const Graph& g1 = spec.g1;
    const Graph& g2 = spec.g2;
    check_vertex(g1, spec.x1);
    check_vertex(g1, spec.y1);
    check_vertex(g2, spec.x2);
    check_vertex(g2, spec.y2);
    if (!g1.has_edge(spec.x1, spec.y1))
        throw Error(Errc::edge_not_present, "x1y1 = (" + std::to_string(spec.x1) + "," +
                                                std::to_string(spec.y1) + ") is not an edge of g1");
    if (!g2.has_edge(spec.x2, spec.y2))
        throw Error(Errc::edge_not_present, "x2y2 = (" + std::to_string(spec.x2) + "," +
                                                std::to_string(spec.y2) + ") is not an edge of g2");

    int n1 = g1.vertex_count();
    int n2 = g2.vertex_count();
    int n = n1 + n2 - 1;

    FusionResult out;
    out.fused_vertex = spec.x1; // part 0 keeps its ids
    out.origin_map.resize(2);
    auto& m1 = out.origin_map[0];
    auto& m2 = out.origin_map[1];
    m1.resize(static_cast<std::size_t>(n1));
    m2.resize(static_cast<std::size_t>(n2));
    for (int v = 0; v < n1; ++v) m1[static_cast<std::size_t>(v)] = v;
    for (int v = 0; v < n2; ++v) {
        if (v == spec.x2)
            m2[static_cast<std::size_t>(v)] = out.fused_vertex;
        else
            m2[static_cast<std::size_t>(v)] = n1 + v - (v > spec.x2 ? 1 : 0);
    }

    Edge drop1{std::min(spec.x1, spec.y1), std::max(spec.x1, spec.y1)};
    Edge drop2{std::min(spec.x2, spec.y2), std::max(spec.x2, spec.y2)};
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(g1.edge_count() + g2.edge_count()));
    for (const Edge& e : g1.edges())
        if (e != drop1) edges.emplace_back(e.first, e.second);
    for (const Edge& e : g2.edges())
        if (e != drop2)
            edges.emplace_back(m2[static_cast<std::size_t>(e.first)],
                               m2[static_cast<std::size_t>(e.second)]);
    edges.emplace_back(spec.y1, m2[static_cast<std::size_t>(spec.y2)]);

    std::set<std::string> used;
    std::vector<std::string> labels(static_cast<std::size_t>(n));
    labels[static_cast<std::size_t>(out.fused_vertex)] =
        unique_label("vH(" + g1.label(spec.x1) + g2.label(spec.x2) + ")", used);
    for (int v = 0; v < n1; ++v)
        if (v != spec.x1)
            labels[static_cast<std::size_t>(m1[static_cast<std::size_t>(v)])] =
                unique_label(g1.label(v), used);
    for (int v = 0; v < n2; ++v)
        if (v != spec.x2)
            labels[static_cast<std::size_t>(m2[static_cast<std::size_t>(v)])] =
                unique_label(g2.label(v), used);

    out.graph = Graph::make(n, edges, std::move(labels));
    return out;
}

FusionResult vertex_sum(const VertexSumSpec& spec) {
    int k = static_cast<int>(spec.parts.size());
    if (k < 2) throw Error(Errc::invalid_parameter, "vertex_sum requires k >= 2 parts");
    for (const VertexSumPart& part : spec.parts) check_vertex(part.graph, part.center);

    int n = 1;
    for (const VertexSumPart& part : spec.parts) n += part.graph.vertex_count() - 1;

    FusionResult out;
    out.fused_vertex = spec.parts[0].center;
    out.origin_map.resize(static_cast<std::size_t>(k));
    int base = spec.parts[0].graph.vertex_count();
    for (int i = 0; i < k; ++i) {
        const Graph& gi = spec.parts[static_cast<std::size_t>(i)].graph;
        int ui = spec.parts[static_cast<std::size_t>(i)].center;
        auto& m = out.origin_map[static_cast<std::size_t>(i)];
        m.resize(static_cast<std::size_t>(gi.vertex_count()));
        for (int v = 0; v < gi.vertex_count(); ++v) {
            if (i == 0)
                m[static_cast<std::size_t>(v)] = v;
            else if (v == ui)
                m[static_cast<std::size_t>(v)] = out.fused_vertex;
            else
                m[static_cast<std::size_t>(v)] = base + v - (v > ui ? 1 : 0);
        }
        if (i > 0) base += gi.vertex_count() - 1;
    }

    std::vector<Edge> edges;
    for (int i = 0; i < k; ++i) {
        const auto& m = out.origin_map[static_cast<std::size_t>(i)];
        for (const Edge& e : spec.parts[static_cast<std::size_t>(i)].graph.edges())
            edges.emplace_back(m[static_cast<std::size_t>(e.first)],
                               m[static_cast<std::size_t>(e.second)]);
    }

    std::set<std::string> used;
    std::vector<std::string> labels(static_cast<std::size_t>(n));
    labels[static_cast<std::size_t>(out.fused_vertex)] = unique_label("u", used);
    for (int i = 0; i < k; ++i) {
        const Graph& gi = spec.parts[static_cast<std::size_t>(i)].graph;
        int ui = spec.parts[static_cast<std::size_t>(i)].center;
        const auto& m = out.origin_map[static_cast<std::size_t>(i)];
        for (int v = 0; v < gi.vertex_count(); ++v)
            if (v != ui)
                labels[static_cast<std::size_t>(m[static_cast<std::size_t>(v)])] =
                    unique_label(gi.label(v), used);
    }

    out.graph = Graph::make(n, edges, std::move(labels));
    return out;
}

FusionResult vertex_sum_copies(const Graph& g, VertexId u, int t) {
    if (t < 2) throw Error(Errc::invalid_parameter, "vertex_sum_copies requires t >= 2");
    check_vertex(g, u);
    VertexSumSpec spec;
    spec.parts.reserve(static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i) spec.parts.push_back(VertexSumPart{g, u});
    return vertex_sum(spec);
}

} // namespace strongdom
