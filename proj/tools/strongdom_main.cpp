#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "strongdom/audit.hpp"
#include "strongdom/bounds.hpp"
#include "strongdom/families.hpp"
#include "strongdom/graph_io.hpp"
#include "strongdom/report.hpp"
#include "strongdom/solver.hpp"

namespace {

using namespace strongdom;

// Exit codes: 0 = all checks hold, 1 = a bound was violated, 2 = usage or
// hypothesis error.
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

void emit_fusion(const FusionResult& fusion, const std::string& out_path) {
    if (out_path.empty())
        std::cout << to_text(fusion.graph);
    else
        write_graph(fusion.graph, out_path);
}

int report_and_flag(const BoundReport& report, ReportFormat format) {
    std::cout << render_report({report}, format);
    if (!report.holds) {
        std::cerr << "BOUND VIOLATED: " << report.instance << " exact=" << report.exact
                  << " outside [" << report.lower << "," << report.upper << "]\n";
        return kExitViolation;
    }
    return 0;
}

void write_family(const std::vector<Graph>& parts, const FusionResult& fusion,
                  const std::string& prefix) {
    if (!prefix.empty()) {
        for (std::size_t i = 0; i < parts.size(); ++i)
            write_graph(parts[i], prefix + ".part" + std::to_string(i + 1) + ".g");
        write_graph(fusion.graph, prefix + ".fused.g");
    }
    for (std::size_t i = 0; i < parts.size(); ++i)
        std::cout << "part" << i + 1 << ": n=" << parts[i].vertex_count()
                  << " m=" << parts[i].edge_count() << "\n";
    std::cout << "fused: n=" << fusion.graph.vertex_count()
              << " m=" << fusion.graph.edge_count() << " fused_vertex=" << fusion.fused_vertex
              << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"strongdom: exact strong domination numbers, Hajos and vertex-sum "
                 "fusions, and bound verification"};
    app.require_subcommand(1);

    int oracle_limit = kDefaultOracleLimit;
    app.add_option("--oracle-limit", oracle_limit,
                   "subset-enumeration cap for the brute-force oracle")
        ->envname("STRONGDOM_ORACLE_LIMIT");

    int exit_code = 0;

    // gamma-st
    auto* gamma_cmd = app.add_subcommand("gamma-st", "compute the strong domination number");
    std::string gamma_file;
    std::string gamma_method = "bb";
    bool gamma_witness = false;
    gamma_cmd->add_option("file", gamma_file, "graph file")->required();
    gamma_cmd->add_option("--method", gamma_method, "brute|bb (default bb)")
        ->check(CLI::IsMember({"brute", "bb"}));
    gamma_cmd->add_flag("--witness", gamma_witness, "also print one optimal set");
    gamma_cmd->callback([&] {
        Graph g = read_graph(gamma_file);
        SolveResult r = gamma_method == "brute" ? gamma_st_bruteforce(g, {}, oracle_limit)
                                                : gamma_st_exact(g);
        std::cout << r.optimum << "\n";
        if (gamma_witness) {
            bool first = true;
            for (int v : r.witness.to_vector()) {
                std::cout << (first ? "" : " ") << v;
                first = false;
            }
            std::cout << "\n";
        }
    });

    // hajos
    auto* hajos_cmd = app.add_subcommand("hajos", "Hajos sum of two graphs");
    std::string hajos_f1, hajos_f2, hajos_out;
    int hx1 = 0, hy1 = 0, hx2 = 0, hy2 = 0;
    hajos_cmd->add_option("g1", hajos_f1)->required();
    hajos_cmd->add_option("g2", hajos_f2)->required();
    hajos_cmd->add_option("--x1", hx1)->required();
    hajos_cmd->add_option("--y1", hy1)->required();
    hajos_cmd->add_option("--x2", hx2)->required();
    hajos_cmd->add_option("--y2", hy2)->required();
    hajos_cmd->add_option("-o,--output", hajos_out, "write the fused graph here");
    hajos_cmd->callback([&] {
        HajosSpec spec{read_graph(hajos_f1), read_graph(hajos_f2), hx1, hy1, hx2, hy2};
        emit_fusion(hajos_sum(spec), hajos_out);
    });

    // vsum
    auto* vsum_cmd = app.add_subcommand("vsum", "vertex-sum of k graphs");
    std::vector<std::string> vsum_files;
    std::vector<int> vsum_at;
    std::string vsum_out;
    vsum_cmd->add_option("graphs", vsum_files, "graph files")->required()->expected(-2);
    vsum_cmd->add_option("--at", vsum_at, "comma-separated centre ids, one per file")
        ->required()
        ->delimiter(',');
    vsum_cmd->add_option("-o,--output", vsum_out, "write the fused graph here");
    vsum_cmd->callback([&] {
        if (vsum_at.size() != vsum_files.size())
            throw Error(Errc::invalid_parameter, "--at needs one id per graph file");
        VertexSumSpec spec;
        for (std::size_t i = 0; i < vsum_files.size(); ++i)
            spec.parts.push_back(VertexSumPart{read_graph(vsum_files[i]), vsum_at[i]});
        emit_fusion(vertex_sum(spec), vsum_out);
    });

    // vsum-copies
    auto* copies_cmd = app.add_subcommand("vsum-copies", "vertex-sum of t copies of one graph");
    std::string copies_file, copies_out;
    int copies_at = 0, copies_t = 2;
    copies_cmd->add_option("graph", copies_file)->required();
    copies_cmd->add_option("--at", copies_at, "centre id")->required();
    copies_cmd->add_option("--t", copies_t, "number of copies")->required();
    copies_cmd->add_option("-o,--output", copies_out, "write the fused graph here");
    copies_cmd->callback([&] {
        emit_fusion(vertex_sum_copies(read_graph(copies_file), copies_at, copies_t), copies_out);
    });

    // check-bounds
    auto* check_cmd = app.add_subcommand("check-bounds", "evaluate fusion bounds exactly");
    check_cmd->require_subcommand(1);
    std::string check_format = "table";
    check_cmd->add_option("--format", check_format, "table|csv|json")
        ->check(CLI::IsMember({"table", "csv", "json"}));

    auto* check_hajos = check_cmd->add_subcommand("hajos", "Hajos sum bounds");
    std::string cb_f1, cb_f2;
    int cbx1 = 0, cby1 = 0, cbx2 = 0, cby2 = 0;
    check_hajos->add_option("g1", cb_f1)->required();
    check_hajos->add_option("g2", cb_f2)->required();
    check_hajos->add_option("--x1", cbx1)->required();
    check_hajos->add_option("--y1", cby1)->required();
    check_hajos->add_option("--x2", cbx2)->required();
    check_hajos->add_option("--y2", cby2)->required();
    check_hajos->callback([&] {
        HajosSpec spec{read_graph(cb_f1), read_graph(cb_f2), cbx1, cby1, cbx2, cby2};
        exit_code = report_and_flag(check_hajos_bounds(spec), parse_report_format(check_format));
    });

    auto* check_vsum = check_cmd->add_subcommand("vsum", "vertex-sum bounds");
    std::vector<std::string> cbv_files;
    std::vector<int> cbv_at;
    check_vsum->add_option("graphs", cbv_files)->required()->expected(-2);
    check_vsum->add_option("--at", cbv_at)->required()->delimiter(',');
    check_vsum->callback([&] {
        if (cbv_at.size() != cbv_files.size())
            throw Error(Errc::invalid_parameter, "--at needs one id per graph file");
        VertexSumSpec spec;
        for (std::size_t i = 0; i < cbv_files.size(); ++i)
            spec.parts.push_back(VertexSumPart{read_graph(cbv_files[i]), cbv_at[i]});
        exit_code = report_and_flag(check_vsum_bounds(spec), parse_report_format(check_format));
    });

    auto* check_copies = check_cmd->add_subcommand("copies", "t-copies vertex-sum bounds");
    std::string cbc_file;
    int cbc_at = 0, cbc_t = 2;
    check_copies->add_option("graph", cbc_file)->required();
    check_copies->add_option("--at", cbc_at)->required();
    check_copies->add_option("--t", cbc_t)->required();
    check_copies->callback([&] {
        exit_code = report_and_flag(check_copies_bounds(read_graph(cbc_file), cbc_at, cbc_t),
                                    parse_report_format(check_format));
    });

    // family
    auto* family_cmd = app.add_subcommand("family", "generate a tightness family instance");
    std::string family_name, family_out;
    int fam_k = 2, fam_h = 0, fam_m = 0, fam_s = 0;
    family_cmd->set_help_flag("--help", "print help"); // frees -h/--h for the hub count
    family_cmd
        ->add_option("name", family_name, "hajos-upper|hajos-lower|vsum-upper|vsum-lower|k6c6")
        ->required()
        ->check(CLI::IsMember({"hajos-upper", "hajos-lower", "vsum-upper", "vsum-lower", "k6c6"}));
    family_cmd->add_option("--k", fam_k, "copies (vsum families)");
    family_cmd->add_option("--h,--hubs", fam_h, "hubs per part (lower-bound families)");
    family_cmd->add_option("--m,--mids", fam_m, "mids per hub (lower-bound families)");
    family_cmd->add_option("--s,--supports", fam_s, "supports (hajos-lower)");
    family_cmd->add_option("-o,--output", family_out, "file prefix for the generated graphs");
    family_cmd->callback([&] {
        if (family_name == "hajos-upper" || family_name == "hajos-lower" ||
            family_name == "k6c6") {
            HajosSpec spec;
            if (family_name == "hajos-upper") {
                spec = hajos_upper_family();
            } else if (family_name == "k6c6") {
                spec = k6_c6_instance();
            } else {
                HajosLowerParams params;
                if (fam_h > 0) params.hubs = fam_h;
                if (fam_m > 0) params.mids_per_hub = fam_m;
                if (fam_s > 0) params.supports = fam_s;
                spec = hajos_lower_family(params);
            }
            write_family({spec.g1, spec.g2}, hajos_sum(spec), family_out);
            std::cout << "identify: x1=" << spec.x1 << " y1=" << spec.y1 << " x2=" << spec.x2
                      << " y2=" << spec.y2 << "\n";
        } else {
            VertexSumSpec spec = family_name == "vsum-upper"
                                     ? vsum_upper_family(fam_k)
                                     : vsum_lower_family(fam_k, fam_h > 0 ? fam_h : 2,
                                                         fam_m > 0 ? fam_m : 2);
            std::vector<Graph> parts;
            std::string centers;
            for (std::size_t i = 0; i < spec.parts.size(); ++i) {
                parts.push_back(spec.parts[i].graph);
                if (i) centers += ',';
                centers += std::to_string(spec.parts[i].center);
            }
            write_family(parts, vertex_sum(spec), family_out);
            std::cout << "identify: at=" << centers << "\n";
        }
    });

    // audit
    auto* audit_cmd =
        app.add_subcommand("audit", "randomized verification of both fusion bounds");
    AuditOptions audit_options;
    std::string audit_format = "table";
    audit_cmd->add_option("--trials", audit_options.trials, "trials per bound (default 200)");
    audit_cmd->add_option("--max-n", audit_options.max_n, "per-part vertex cap (default 9)");
    audit_cmd->add_option("--seed", audit_options.seed, "RNG seed (default 42)");
    audit_cmd->add_option("--format", audit_format, "table|csv|json")
        ->check(CLI::IsMember({"table", "csv", "json"}));
    audit_cmd->callback([&] {
        AuditOutcome hajos = audit_hajos_bounds(audit_options);
        AuditOutcome vsum = audit_vsum_bounds(audit_options);
        std::vector<BoundReport> rows = hajos.rows;
        rows.insert(rows.end(), vsum.rows.begin(), vsum.rows.end());
        std::cout << render_report(rows, parse_report_format(audit_format));
        int violations = hajos.violations + vsum.violations;
        std::cerr << "audit: " << rows.size() << " trials, " << violations << " violations\n";
        if (violations > 0) exit_code = kExitViolation;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitUsage;
    }
    return exit_code;
}
