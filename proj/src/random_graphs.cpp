#include "strongdom/random_graphs.hpp"

#include <vector>

namespace strongdom {

int uniform_int(Rng& rng, int lo, int hi) {
    // Modulo bias is irrelevant at harness scale; what matters is that the
    // draw sequence is identical across platforms.
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

bool chance(Rng& rng, double p) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p;
}

double pick_density(Rng& rng) {
    static constexpr double kDensities[] = {0.2, 0.5, 0.8};
    return kDensities[uniform_int(rng, 0, 2)];
}

Graph erdos_renyi(Rng& rng, int n, double p) {
    std::vector<Edge> edges;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (chance(rng, p)) edges.emplace_back(a, b);
    return Graph::make(n, edges);
}

namespace {

std::vector<std::vector<int>> components(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<int>> out;
    for (int root = 0; root < n; ++root) {
        if (comp[static_cast<std::size_t>(root)] >= 0) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        std::vector<int> stack{root};
        comp[static_cast<std::size_t>(root)] = id;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            out[static_cast<std::size_t>(id)].push_back(v);
            for (int w : g.adjacent(v)) {
                if (comp[static_cast<std::size_t>(w)] < 0) {
                    comp[static_cast<std::size_t>(w)] = id;
                    stack.push_back(w);
                }
            }
        }
    }
    return out;
}

} // namespace

Graph random_connected_graph(Rng& rng, int n, double p) {
    Graph g = erdos_renyi(rng, n, p);
    while (!is_connected(g)) {
        auto comps = components(g);
        const auto& a = comps[0];
        const auto& b = comps[1];
        std::vector<Edge> edges = g.edges();
        edges.emplace_back(a[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(a.size()) - 1))],
                           b[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(b.size()) - 1))]);
        g = Graph::make(n, edges);
    }
    return g;
}

namespace {

// Uniform edge with a non-pendant endpoint designated x. In a connected
// graph on >= 3 vertices every edge has one.
void pick_identified_edge(Rng& rng, const Graph& g, VertexId& x, VertexId& y) {
    const Edge& e = g.edges()[static_cast<std::size_t>(
        uniform_int(rng, 0, g.edge_count() - 1))];
    bool a_ok = g.degree(e.first) >= 2;
    bool b_ok = g.degree(e.second) >= 2;
    if (a_ok && b_ok) {
        bool swap = (rng() & 1) != 0;
        x = swap ? e.second : e.first;
    } else {
        x = a_ok ? e.first : e.second;
    }
    y = (x == e.first) ? e.second : e.first;
}

} // namespace

HajosSpec random_hajos_spec(Rng& rng, int min_n, int max_n) {
    HajosSpec spec;
    spec.g1 = random_connected_graph(rng, uniform_int(rng, min_n, max_n), pick_density(rng));
    pick_identified_edge(rng, spec.g1, spec.x1, spec.y1);
    spec.g2 = random_connected_graph(rng, uniform_int(rng, min_n, max_n), pick_density(rng));
    pick_identified_edge(rng, spec.g2, spec.x2, spec.y2);
    return spec;
}

VertexSumSpec random_vsum_spec(Rng& rng, int min_k, int max_k, int min_n, int max_n) {
    VertexSumSpec spec;
    int k = uniform_int(rng, min_k, max_k);
    for (int i = 0; i < k; ++i) {
        int n = uniform_int(rng, min_n, max_n);
        Graph g = erdos_renyi(rng, n, pick_density(rng));
        if (g.edge_count() == 0) {
            int a = uniform_int(rng, 0, n - 1);
            int b = uniform_int(rng, 0, n - 2);
            if (b >= a) ++b;
            g = Graph::make(n, {{a, b}});
        }
        // Identifying an isolated vertex can push the fused optimum below
        // the audited lower bound, so centres are drawn from the vertices
        // with at least one neighbor.
        std::vector<int> candidates;
        for (int v = 0; v < n; ++v)
            if (g.degree(v) >= 1) candidates.push_back(v);
        int u = candidates[static_cast<std::size_t>(
            uniform_int(rng, 0, static_cast<int>(candidates.size()) - 1))];
        spec.parts.push_back(VertexSumPart{std::move(g), u});
    }
    return spec;
}

} // namespace strongdom
