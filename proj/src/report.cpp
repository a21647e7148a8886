#include "strongdom/report.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace strongdom {

namespace {

std::string join_ints(const std::vector<int>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ';';
        out += std::to_string(xs[i]);
    }
    return out;
}

std::vector<std::string> row_fields(const BoundReport& r) {
    return {r.instance,
            join_ints(r.part_gamma),
            join_ints(r.part_degree),
            std::to_string(r.lower),
            std::to_string(r.upper),
            std::to_string(r.exact),
            tight_side_name(r.tight),
            r.holds ? "true" : "false"};
}

const std::vector<std::string> kHeader = {"instance", "gst_parts", "degrees", "lower",
                                          "upper",    "exact",     "tight",   "holds"};

} // namespace

std::string render_report(const std::vector<BoundReport>& rows, ReportFormat format) {
    if (format == ReportFormat::csv) {
        std::ostringstream out;
        out << "instance,gst_parts,degrees,lower,upper,exact,tight,holds\n";
        for (const BoundReport& r : rows) {
            auto fields = row_fields(r);
            for (std::size_t i = 0; i < fields.size(); ++i)
                out << (i ? "," : "") << fields[i];
            out << "\n";
        }
        return out.str();
    }
    if (format == ReportFormat::json) {
        auto doc = nlohmann::ordered_json::array();
        for (const BoundReport& r : rows) {
            nlohmann::ordered_json row;
            row["instance"] = r.instance;
            row["gst_parts"] = join_ints(r.part_gamma);
            row["degrees"] = join_ints(r.part_degree);
            row["lower"] = r.lower;
            row["upper"] = r.upper;
            row["exact"] = r.exact;
            row["tight"] = tight_side_name(r.tight);
            row["holds"] = r.holds;
            doc.push_back(std::move(row));
        }
        return doc.dump(2) + "\n";
    }

    // Aligned text table.
    std::vector<std::size_t> width(kHeader.size());
    for (std::size_t i = 0; i < kHeader.size(); ++i) width[i] = kHeader[i].size();
    std::vector<std::vector<std::string>> cells;
    cells.reserve(rows.size());
    for (const BoundReport& r : rows) {
        cells.push_back(row_fields(r));
        for (std::size_t i = 0; i < cells.back().size(); ++i)
            width[i] = std::max(width[i], cells.back()[i].size());
    }
    std::ostringstream out;
    auto emit = [&](const std::vector<std::string>& fields) {
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (i) out << "  ";
            out << fields[i];
            if (i + 1 < fields.size()) out << std::string(width[i] - fields[i].size(), ' ');
        }
        out << "\n";
    };
    emit(kHeader);
    for (const auto& row : cells) emit(row);
    return out.str();
}

ReportFormat parse_report_format(const std::string& name) {
    if (name == "table") return ReportFormat::table;
    if (name == "csv") return ReportFormat::csv;
    if (name == "json") return ReportFormat::json;
    throw Error(Errc::invalid_parameter, "unknown report format '" + name + "'");
}

} // namespace strongdom
