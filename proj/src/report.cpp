#include "pcoh/report.hpp"

#include <map>
#include <sstream>

#include "json.hpp"

namespace pcoh {

namespace {

using nlohmann::json;

bool keep(const SliceRecord& rec) {
    return rec.dim > 0 || rec.expected > 0 || rec.status == "fail";
}

json slice_to_json(const SliceRecord& rec) {
    json j;
    j["complex"] = cx_name(rec.cx);
    j["d"] = rec.d;
    j["k"] = rec.k;
    j["r"] = rec.r;
    j["dim"] = rec.dim;
    j["reps"] = rec.reps;
    if (!rec.reps_y.empty()) j["reps_yframe"] = rec.reps_y;
    if (rec.expected >= 0) {
        j["expected"] = rec.expected;
        j["status"] = rec.status;
    }
    return j;
}

json summary_json(const TableResult& res) {
    json s;
    s["structure"] = res.params.name();
    s["params"] = {{"a", res.params.a.str()}, {"b", res.params.b.str()}, {"c", res.params.c.str()}};
    if (!res.regime.empty()) s["regime"] = res.regime;
    s["rmax"] = res.options.rmax;
    s["mode"] = res.options.verify ? "verify" : "compute";
    std::map<int, int> totals;
    for (const auto& rec : res.records)
        if (rec.cx == Cx::R) totals[rec.d] += rec.dim;
    json t;
    for (const auto& [d, n] : totals) t[std::to_string(d)] = n;
    s["total_dims_r"] = t;
    if (res.checked > 0) {
        s["checked"] = res.checked;
        s["failures"] = res.failures;
        s["all_pass"] = res.all_pass;
    }
    return s;
}

}  // namespace

std::optional<ReportFormat> parse_format(const std::string& name) {
    if (name == "json") return ReportFormat::Json;
    if (name == "markdown" || name == "md") return ReportFormat::Markdown;
    if (name == "csv") return ReportFormat::Csv;
    return std::nullopt;
}

std::string emit_report(const TableResult& res, ReportFormat fmt) {
    switch (fmt) {
        case ReportFormat::Json: {
            json j;
            j["slices"] = json::array();
            for (const auto& rec : res.records)
                if (keep(rec)) j["slices"].push_back(slice_to_json(rec));
            j["summary"] = summary_json(res);
            return j.dump(2) + "\n";
        }
        case ReportFormat::Csv: {
            std::ostringstream os;
            os << "complex,d,k,r,dim,expected,status\n";
            for (const auto& rec : res.records) {
                if (!keep(rec)) continue;
                os << cx_name(rec.cx) << ',' << rec.d << ',' << rec.k << ',' << rec.r << ','
                   << rec.dim << ',';
                if (rec.expected >= 0) os << rec.expected;
                os << ',' << rec.status << '\n';
            }
            return os.str();
        }
        case ReportFormat::Markdown: {
            std::ostringstream os;
            os << "# Cohomology table: " << res.params.name() << " (a=" << res.params.a.str()
               << ", b=" << res.params.b.str() << ", c=" << res.params.c.str() << ")\n\n";
            if (!res.regime.empty()) os << "Regime: `" << res.regime << "`\n\n";
            for (int d = 0; d <= 3; ++d) {
                bool any = false;
                for (const auto& rec : res.records) any = any || (rec.d == d && keep(rec));
                if (!any) continue;
                os << "## degree " << d << "\n\n";
                os << "| complex | k | r | dim | expected | status | representatives |\n";
                os << "|---|---|---|---|---|---|---|\n";
                for (const auto& rec : res.records) {
                    if (rec.d != d || !keep(rec)) continue;
                    os << "| " << cx_name(rec.cx) << " | " << rec.k << " | " << rec.r << " | "
                       << rec.dim << " | ";
                    if (rec.expected >= 0) os << rec.expected;
                    os << " | " << rec.status << " | ";
                    for (std::size_t i = 0; i < rec.reps.size(); ++i)
                        os << (i ? "; " : "") << "`" << rec.reps[i] << "`";
                    os << " |\n";
                }
                os << "\n";
            }
            if (res.checked > 0)
                os << "Checked " << res.checked << " slices, " << res.failures << " failures.\n";
            return os.str();
        }
    }
    return {};
}

std::string emit_les_report(const StructureParams& p, const std::vector<LesReport>& reports,
                            ReportFormat fmt) {
    bool all = true;
    for (const auto& rep : reports) all = all && rep.exact && rep.dims_consistent && rep.dirsum_consistent;
    if (fmt == ReportFormat::Json) {
        json j;
        j["structure"] = p.name();
        j["params"] = {{"a", p.a.str()}, {"b", p.b.str()}, {"c", p.c.str()}};
        j["grades"] = json::array();
        for (const auto& rep : reports) {
            json g;
            g["k"] = rep.grade.k;
            g["r"] = rep.grade.r;
            g["exact"] = rep.exact;
            g["dims_consistent"] = rep.dims_consistent;
            g["dirsum_consistent"] = rep.dirsum_consistent;
            json hd;
            const char* names[3] = {"P", "R", "S"};
            for (int c = 0; c < 3; ++c) {
                json row = json::array();
                for (int d = 0; d <= 3; ++d) row.push_back(rep.h_dims[c][d]);
                hd[names[c]] = row;
            }
            g["h_dims"] = hd;
            j["grades"].push_back(g);
        }
        j["all_exact"] = all;
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    for (const auto& rep : reports) os << rep.summary() << "\n";
    os << (all ? "all grades exact" : "EXACTNESS FAILURES PRESENT") << "\n";
    return os.str();
}

std::optional<std::vector<ParsedSlice>> parse_report_dims(const std::string& json_text) {
    json j = json::parse(json_text, nullptr, false);
    if (j.is_discarded() || !j.contains("slices")) return std::nullopt;
    std::vector<ParsedSlice> out;
    for (const auto& s : j["slices"]) {
        ParsedSlice p;
        if (!s.contains("complex") || !s.contains("d") || !s.contains("k") || !s.contains("r") ||
            !s.contains("dim"))
            return std::nullopt;
        p.cx = s["complex"].get<std::string>();
        p.d = s["d"].get<int>();
        p.k = s["k"].get<int>();
        p.r = s["r"].get<int>();
        p.dim = s["dim"].get<int>();
        out.push_back(std::move(p));
    }
    return out;
}

std::vector<ParsedSlice> dims_of(const TableResult& res) {
    std::vector<ParsedSlice> out;
    for (const auto& rec : res.records)
        if (keep(rec)) out.push_back(ParsedSlice{cx_name(rec.cx), rec.d, rec.k, rec.r, rec.dim});
    return out;
}

}  // namespace pcoh
