#include "strongdom/bounds.hpp"

#include <stdexcept>
#include <string>

namespace strongdom {

namespace {

TightSide classify_tight(long long lower, long long upper, long long exact) {
    bool lo = exact == lower;
    bool up = exact == upper;
    if (lo && up) return TightSide::both;
    if (lo) return TightSide::lower;
    if (up) return TightSide::upper;
    return TightSide::none;
}

void finish(BoundReport& report) {
    report.holds = report.lower <= report.exact && report.exact <= report.upper;
    report.tight = classify_tight(report.lower, report.upper, report.exact);
}

// "a is strong dominated by b under d": a outside d, b inside, ab an edge,
// deg(a) <= deg(b).
bool strong_dominated_by(const Graph& g, VertexSet d, VertexId a, VertexId b) {
    return !d.contains(a) && d.contains(b) && g.has_edge(a, b) && g.degree(a) <= g.degree(b);
}

void require_non_pendant(const Graph& g, VertexId x, const char* name) {
    if (is_pendant(g, x))
        throw Error(Errc::hypothesis_violated,
                    std::string(name) + " = " + std::to_string(x) + " is a pendant vertex");
}

} // namespace

const char* tight_side_name(TightSide side) {
    switch (side) {
        case TightSide::none: return "none";
        case TightSide::lower: return "lower";
        case TightSide::upper: return "upper";
        case TightSide::both: return "both";
    }
    return "?";
}

BoundReport check_hajos_bounds(const HajosSpec& spec) {
    FusionResult fusion = hajos_sum(spec); // validates the spec
    require_non_pendant(spec.g1, spec.x1, "x1");
    require_non_pendant(spec.g2, spec.x2, "x2");

    SolveResult r1 = gamma_st_exact(spec.g1);
    SolveResult r2 = gamma_st_exact(spec.g2);
    SolveResult r3 = gamma_st_exact(fusion.graph);

    BoundReport report;
    report.instance = "hajos n1=" + std::to_string(spec.g1.vertex_count()) +
                      " n2=" + std::to_string(spec.g2.vertex_count()) +
                      " x1=" + std::to_string(spec.x1) + " y1=" + std::to_string(spec.y1) +
                      " x2=" + std::to_string(spec.x2) + " y2=" + std::to_string(spec.y2);
    report.part_gamma = {r1.optimum, r2.optimum};
    report.part_degree = {spec.g1.degree(spec.x1), spec.g2.degree(spec.x2)};
    report.lower = static_cast<long long>(r1.optimum) + r2.optimum -
                   spec.g1.degree(spec.x1) - spec.g2.degree(spec.x2) + 2;
    report.upper = static_cast<long long>(r1.optimum) + r2.optimum + 1;
    report.exact = r3.optimum;
    report.nodes_explored = r1.nodes_explored + r2.nodes_explored + r3.nodes_explored;
    finish(report);
    return report;
}

BoundReport check_vsum_bounds(const VertexSumSpec& spec) {
    FusionResult fusion = vertex_sum(spec);

    BoundReport report;
    std::string sizes;
    std::string centers;
    long long gamma_sum = 0;
    long long degree_sum = 0;
    std::uint64_t nodes = 0;
    for (std::size_t i = 0; i < spec.parts.size(); ++i) {
        const VertexSumPart& part = spec.parts[i];
        SolveResult r = gamma_st_exact(part.graph);
        report.part_gamma.push_back(r.optimum);
        report.part_degree.push_back(part.graph.degree(part.center));
        gamma_sum += r.optimum;
        degree_sum += part.graph.degree(part.center);
        nodes += r.nodes_explored;
        if (i) {
            sizes += ';';
            centers += ';';
        }
        sizes += std::to_string(part.graph.vertex_count());
        centers += std::to_string(part.center);
    }
    SolveResult rf = gamma_st_exact(fusion.graph);

    report.instance = "vsum k=" + std::to_string(spec.parts.size()) + " n=" + sizes +
                      " at=" + centers;
    report.lower = gamma_sum - degree_sum + 1;
    report.upper = gamma_sum + 1;
    report.exact = rf.optimum;
    report.nodes_explored = nodes + rf.nodes_explored;
    finish(report);
    return report;
}

BoundReport check_copies_bounds(const Graph& g, VertexId u, int t) {
    FusionResult fusion = vertex_sum_copies(g, u, t);
    SolveResult r = gamma_st_exact(g);
    SolveResult rf = gamma_st_exact(fusion.graph);

    BoundReport report;
    report.instance = "copies t=" + std::to_string(t) + " n=" + std::to_string(g.vertex_count()) +
                      " at=" + std::to_string(u);
    report.part_gamma.assign(static_cast<std::size_t>(t), r.optimum);
    report.part_degree.assign(static_cast<std::size_t>(t), g.degree(u));
    report.lower = static_cast<long long>(t) * (r.optimum - g.degree(u)) + 1;
    report.upper = static_cast<long long>(t) * r.optimum + 1;
    report.exact = rf.optimum;
    report.nodes_explored = r.nodes_explored + rf.nodes_explored;
    finish(report);
    return report;
}

HajosReplay replay_hajos_upper_construction(const HajosSpec& spec, VertexSet d1, VertexSet d2) {
    if (!is_strong_dominating(spec.g1, d1))
        throw Error(Errc::invalid_witness, "d1 is not a strong dominating set of g1");
    if (!is_strong_dominating(spec.g2, d2))
        throw Error(Errc::invalid_witness, "d2 is not a strong dominating set of g2");

    FusionResult fusion = hajos_sum(spec);
    require_non_pendant(spec.g1, spec.x1, "x1");
    require_non_pendant(spec.g2, spec.x2, "x2");

    bool y1_by_x1 = strong_dominated_by(spec.g1, d1, spec.y1, spec.x1);
    bool y2_by_x2 = strong_dominated_by(spec.g2, d2, spec.y2, spec.x2);
    bool x1_by_y1 = strong_dominated_by(spec.g1, d1, spec.x1, spec.y1);

    VertexSet base = fusion.map_set(0, d1.without(spec.x1)) |
                     fusion.map_set(1, d2.without(spec.x2));
    VertexSet d3 = base.with(fusion.fused_vertex);
    VertexId y1m = fusion.map(0, spec.y1);
    VertexId y2m = fusion.map(1, spec.y2);

    // First matching case in the listed order. The later cases' set formulas
    // coincide with case 3 on their joint domain except when y2 loses its
    // only dominator x2, where the y2-augmented mirror of case 2 applies
    // (reached as case 5 or 6 depending on how x1 is dominated).
    int proof_case;
    if (y1_by_x1 && y2_by_x2) {
        proof_case = 1;
        d3.add(spec.g1.degree(spec.y1) >= spec.g2.degree(spec.y2) ? y1m : y2m);
    } else if (y1_by_x1) {
        proof_case = 2;
        d3.add(y1m);
    } else if (!y2_by_x2) {
        proof_case = 3;
    } else {
        proof_case = x1_by_y1 ? 5 : 6;
        d3.add(y2m);
    }

    if (!is_strong_dominating(fusion.graph, d3))
        throw std::logic_error("replayed Hajos construction is not strong dominating");
    return HajosReplay{std::move(fusion), d3, proof_case};
}

VsumReplay replay_vsum_upper_construction(const VertexSumSpec& spec,
                                          const std::vector<VertexSet>& part_sets) {
    if (part_sets.size() != spec.parts.size())
        throw Error(Errc::invalid_parameter, "need one set per part");
    for (std::size_t i = 0; i < spec.parts.size(); ++i)
        if (!is_strong_dominating(spec.parts[i].graph, part_sets[i]))
            throw Error(Errc::invalid_witness,
                        "d" + std::to_string(i + 1) + " is not a strong dominating set");

    FusionResult fusion = vertex_sum(spec);
    VertexSet d;
    for (std::size_t i = 0; i < part_sets.size(); ++i)
        d = d | fusion.map_set(static_cast<int>(i), part_sets[i]);
    d.add(fusion.fused_vertex);

    if (!is_strong_dominating(fusion.graph, d))
        throw std::logic_error("replayed vertex-sum construction is not strong dominating");
    return VsumReplay{std::move(fusion), d};
}

} // namespace strongdom
