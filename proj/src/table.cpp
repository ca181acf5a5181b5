#include "pcoh/table.hpp"

#include <algorithm>
#include <stdexcept>

namespace pcoh {

namespace {

std::vector<Bigrade> grades_up_to(int rmax) {
    std::vector<Bigrade> g;
    for (int r = 0; r <= rmax; ++r)
        for (int k = 0; k <= r; ++k) g.push_back(Bigrade{k, r});
    return g;
}

void render_reps(const SliceCohomology& h, SliceRecord& rec) {
    for (const auto& rep : h.reps) {
        if (h.spec.cx == Cx::R) {
            auto mv = r_coords_to_multivector(h.spec.d, h.spec.grade, rep);
            rec.reps.push_back(mv.str());
            rec.reps_y.push_back(to_y_frame(mv, h.spec.grade).str());
        } else if (h.spec.cx == Cx::P) {
            rec.reps.push_back(p_coords_to_ycochain(h.spec.d, h.spec.grade, rep).str());
        } else {
            rec.reps.push_back(s_coords_to_ycochain(h.spec.d, h.spec.grade, rep).str());
        }
    }
}

// Verifies that the oracle generators are cocycles spanning the computed
// cohomology: rank([image | generators]) = rank(image) + expected.
bool generators_span(const StructureCx& s, int d, const Bigrade& g,
                     const std::vector<YCochain>& gens, int computed_dim) {
    if (static_cast<int>(gens.size()) != computed_dim) return false;
    auto up = coboundary_matrix(s, Cx::R, d, g);
    auto down = d == 0 ? RatMatrix(r_dim(0, g), 0) : coboundary_matrix(s, Cx::R, d - 1, g);
    auto im = image_basis(down);
    RatMatrix stacked = im.as_columns();
    for (const auto& gen : gens) {
        auto coords = ycochain_to_r_coords(gen);
        if (!coords) return false;
        auto img = up * *coords;
        for (const auto& x : img)
            if (!x.is_zero()) return false;  // not a cocycle
        RatMatrix col(static_cast<int>(coords->size()), 1);
        for (int i = 0; i < col.rows(); ++i) col.at(i, 0) = (*coords)[i];
        stacked = RatMatrix::hstack(stacked, col);
    }
    return rank(stacked) == im.dim() + static_cast<int>(gens.size());
}

}  // namespace

TableResult compute_table(const StructureParams& p, const TableOptions& opt) {
    TableResult res;
    res.params = p;
    res.options = opt;

    const YFrameCoeffs coeffs = yframe_coeffs(p);
    const StructureCx s(coeffs);

    if (p.family != Family::Custom) res.regime = regime_name(classify_regime(p).tag);

    RClassMap oracle;
    bool oracle_sp = false;
    if (opt.verify) {
        oracle = expected_r_classes(p, opt.rmax);  // throws when no table applies
        oracle_sp = p.family == Family::DH2 || (p.family == Family::DH7 && p.c.is_zero());
    }

    const auto grades = grades_up_to(opt.rmax);
    std::vector<std::vector<SliceRecord>> buckets(grades.size());

    auto work = [&](int gi) {
        const Bigrade g = grades[gi];
        auto& out = buckets[gi];
        for (Cx cx : opt.complexes)
            for (int d = 0; d <= 3; ++d) {
                auto h = slice_cohomology(s, cx, d, g);
                SliceRecord rec;
                rec.cx = cx;
                rec.d = d;
                rec.k = g.k;
                rec.r = g.r;
                rec.dim = h.dim;
                if (opt.with_reps) render_reps(h, rec);
                if (opt.verify) {
                    if (cx == Cx::R) {
                        auto it = oracle.find({d, g});
                        rec.expected = it == oracle.end() ? 0 : static_cast<int>(it->second.size());
                        bool ok = rec.dim == rec.expected;
                        if (ok && rec.expected > 0)
                            ok = generators_span(s, d, g, it->second, rec.dim);
                        rec.status = ok ? "pass" : "fail";
                    } else if (oracle_sp) {
                        rec.expected =
                            cx == Cx::P ? expected_dim_p(p, d, g) : expected_dim_s(p, d, g);
                        rec.status = rec.dim == rec.expected ? "pass" : "fail";
                    }
                }
                out.push_back(std::move(rec));
            }
    };

    const int n = static_cast<int>(grades.size());
    if (opt.mode == ExecMode::Parallel) {
        std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
        for (int gi = 0; gi < n; ++gi) {
            try {
                work(gi);
            } catch (...) {
#pragma omp critical(pcoh_table_err)
                if (!err) err = std::current_exception();
            }
        }
        if (err) std::rethrow_exception(err);
    } else {
        for (int gi = 0; gi < n; ++gi) work(gi);
    }

    for (auto& b : buckets)
        for (auto& rec : b) res.records.push_back(std::move(rec));
    std::sort(res.records.begin(), res.records.end(), [](const SliceRecord& a, const SliceRecord& b) {
        auto key = [](const SliceRecord& x) {
            return std::tuple(static_cast<int>(x.cx), x.d, x.k, x.r);
        };
        return key(a) < key(b);
    });

    for (const auto& rec : res.records) {
        if (rec.status == "computed") continue;
        ++res.checked;
        if (rec.status == "fail") {
            ++res.failures;
            res.all_pass = false;
        }
    }
    return res;
}

std::vector<LesReport> les_sweep(const StructureParams& p, int rmax, ExecMode mode) {
    const StructureCx s(yframe_coeffs(p));
    const auto grades = grades_up_to(rmax);
    std::vector<LesReport> reports(grades.size());
    const int n = static_cast<int>(grades.size());
    if (mode == ExecMode::Parallel) {
        std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
        for (int gi = 0; gi < n; ++gi) {
            try {
                reports[gi] = les_check(s, grades[gi]);
            } catch (...) {
#pragma omp critical(pcoh_les_err)
                if (!err) err = std::current_exception();
            }
        }
        if (err) std::rethrow_exception(err);
    } else {
        for (int gi = 0; gi < n; ++gi) reports[gi] = les_check(s, grades[gi]);
    }
    return reports;
}

}  // namespace pcoh
