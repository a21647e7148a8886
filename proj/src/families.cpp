#include "strongdom/families.hpp"

#include <string>
#include <vector>

namespace strongdom {

HajosSpec k6_c6_instance() {
    return HajosSpec{complete_graph(6), cycle_graph(6), 0, 1, 0, 1};
}

Graph hajos_upper_part() {
    // 0 = x, 1 = y, 2..4 = spine path, 5..7 = one pendant leaf per spine
    // vertex. x is adjacent to y and the whole spine; y also to the middle
    // spine vertex.
    std::vector<Edge> edges{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 3},
                            {2, 3}, {3, 4}, {2, 5}, {3, 6}, {4, 7}};
    return Graph::make(8, edges);
}

HajosSpec hajos_upper_family() {
    Graph part = hajos_upper_part();
    return HajosSpec{part, part, 0, 1, 0, 1};
}

Graph hajos_lower_part(const HajosLowerParams& p) {
    if (p.hubs < 2)
        throw Error(Errc::invalid_parameter, "hajos_lower_family requires hubs >= 2");
    if (p.mids_per_hub <= p.hubs || p.mids_per_hub > 2 * p.hubs - 1)
        throw Error(Errc::invalid_parameter,
                    "hajos_lower_family requires hubs < mids_per_hub <= 2*hubs - 1");
    if (p.supports < p.hubs)
        throw Error(Errc::invalid_parameter, "hajos_lower_family requires supports >= hubs");

    // 0 = x, 1 = y, then hubs, hub mids, mid leaves, supports, support
    // leaves, in blocks.
    int h = p.hubs, m = p.mids_per_hub, s = p.supports;
    int hub0 = 2;
    int mid0 = hub0 + h;
    int mleaf0 = mid0 + h * m;
    int sup0 = mleaf0 + h * m;
    int sleaf0 = sup0 + s;
    int n = sleaf0 + s;

    std::vector<Edge> edges;
    edges.emplace_back(0, 1);
    for (int j = 0; j < h; ++j) {
        edges.emplace_back(0, hub0 + j);
        for (int l = 0; l < m; ++l) {
            int mid = mid0 + j * m + l;
            edges.emplace_back(hub0 + j, mid);
            edges.emplace_back(mid, mleaf0 + j * m + l);
        }
    }
    for (int t = 0; t < s; ++t) {
        edges.emplace_back(1, sup0 + t);
        edges.emplace_back(sup0 + t, sleaf0 + t);
    }
    return Graph::make(n, edges);
}

HajosSpec hajos_lower_family(const HajosLowerParams& params) {
    Graph part = hajos_lower_part(params);
    return HajosSpec{part, part, 0, 1, 0, 1};
}

Graph vsum_upper_part() {
    // 0 = u, 1..2 = supports, 3..6 = two pendant leaves per support.
    std::vector<Edge> edges{{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}};
    return Graph::make(7, edges);
}

VertexSumSpec vsum_upper_family(int k) {
    if (k < 2) throw Error(Errc::invalid_parameter, "vsum_upper_family requires k >= 2");
    Graph part = vsum_upper_part();
    VertexSumSpec spec;
    for (int i = 0; i < k; ++i) spec.parts.push_back(VertexSumPart{part, 0});
    return spec;
}

Graph vsum_lower_part(int hubs, int mids_per_hub) {
    if (hubs < 2) throw Error(Errc::invalid_parameter, "vsum_lower_family requires hubs >= 2");
    if (mids_per_hub < 2)
        throw Error(Errc::invalid_parameter, "vsum_lower_family requires mids_per_hub >= 2");
    if (mids_per_hub < hubs)
        throw Error(Errc::invalid_parameter,
                    "vsum_lower_family requires mids_per_hub >= hubs so hubs are forced "
                    "within a part");

    // 0 = u, then hubs, hub mids, one pendant leaf per mid.
    int h = hubs, m = mids_per_hub;
    int hub0 = 1;
    int mid0 = hub0 + h;
    int leaf0 = mid0 + h * m;
    int n = leaf0 + h * m;

    std::vector<Edge> edges;
    for (int j = 0; j < h; ++j) {
        edges.emplace_back(0, hub0 + j);
        for (int l = 0; l < m; ++l) {
            int mid = mid0 + j * m + l;
            edges.emplace_back(hub0 + j, mid);
            edges.emplace_back(mid, leaf0 + j * m + l);
        }
    }
    return Graph::make(n, edges);
}

VertexSumSpec vsum_lower_family(int k, int hubs, int mids_per_hub) {
    if (k < 2) throw Error(Errc::invalid_parameter, "vsum_lower_family requires k >= 2");
    Graph part = vsum_lower_part(hubs, mids_per_hub);
    if (hubs * k <= mids_per_hub + 1)
        throw Error(Errc::invalid_parameter,
                    "vsum_lower_family requires hubs*k > mids_per_hub + 1 so the merged "
                    "centre strong-dominates every hub");
    VertexSumSpec spec;
    for (int i = 0; i < k; ++i) spec.parts.push_back(VertexSumPart{part, 0});
    return spec;
}

} // namespace strongdom
