#pragma once

#include <string>
#include <vector>

#include "strongdom/bounds.hpp"

namespace strongdom {

enum class ReportFormat { table, csv, json };

// Same numeric content in all three formats. CSV header:
//   instance,gst_parts,degrees,lower,upper,exact,tight,holds
// List-valued fields are joined with ';'.
std::string render_report(const std::vector<BoundReport>& rows, ReportFormat format);

// Parses "table" | "csv" | "json"; throws InvalidParameter otherwise.
ReportFormat parse_report_format(const std::string& name);

} // namespace strongdom
