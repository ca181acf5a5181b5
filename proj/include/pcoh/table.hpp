#pragma once

#include <string>
#include <vector>

#include "pcoh/complexes.hpp"
#include "pcoh/structures.hpp"

namespace pcoh {

struct SliceRecord {
    Cx cx = Cx::R;
    int d = 0, k = 0, r = 0;
    int dim = 0;
    std::vector<std::string> reps;        // coordinate frame for R, Y frame for P and S
    std::vector<std::string> reps_y;      // Y-frame form of real representatives
    int expected = -1;                    // -1 when not checked
    std::string status = "computed";      // "computed" | "pass" | "fail"
};

enum class ExecMode { Serial, Parallel };

struct TableOptions {
    int rmax = 6;
    std::vector<Cx> complexes = {Cx::R};
    bool verify = false;
    ExecMode mode = ExecMode::Parallel;
    bool with_reps = true;
};

struct TableResult {
    StructureParams params;
    TableOptions options;
    std::string regime;                   // regime tag when classifiable
    std::vector<SliceRecord> records;     // sorted by (complex, d, k, r)
    bool all_pass = true;
    int checked = 0;
    int failures = 0;
};

/// Computes (and in verify mode checks) the slice cohomology table of a
/// structure for all bigrades k <= r <= rmax. The parallel path fans out
/// over bigrades with OpenMP; the serial path is the reference and both
/// produce identical results.
TableResult compute_table(const StructureParams& p, const TableOptions& opt);

/// Exactness reports for every bigrade up to rmax.
std::vector<LesReport> les_sweep(const StructureParams& p, int rmax, ExecMode mode);

}  // namespace pcoh
