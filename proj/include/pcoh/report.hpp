#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pcoh/table.hpp"

namespace pcoh {

enum class ReportFormat { Json, Markdown, Csv };

std::optional<ReportFormat> parse_format(const std::string& name);

/// Serializes a table result. The slice list carries the nonzero and the
/// checked-but-failing records, sorted by (complex, d, k, r); the summary
/// echoes the structure, regime, cutoff, and pass counts.
std::string emit_report(const TableResult& res, ReportFormat fmt);

std::string emit_les_report(const StructureParams& p, const std::vector<LesReport>& reports,
                            ReportFormat fmt);

/// Dims table parsed back from emitted JSON, for round-trip checks.
struct ParsedSlice {
    std::string cx;
    int d = 0, k = 0, r = 0, dim = 0;
    bool operator==(const ParsedSlice&) const = default;
};
std::optional<std::vector<ParsedSlice>> parse_report_dims(const std::string& json_text);

/// The dim table of a result in the same shape as parse_report_dims.
std::vector<ParsedSlice> dims_of(const TableResult& res);

}  // namespace pcoh
