#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "pcoh/report.hpp"
#include "pcoh/rmatrix.hpp"

using namespace pcoh;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

struct CommonOpts {
    std::string structure;
    std::string a = "0", b = "0", c = "0";
    std::string tensor_path;
    int rmax = 6;
    std::string complexes = "r";
    std::string format = "markdown";
    bool serial = false;
    bool no_reps = false;
};

void add_structure_options(CLI::App* cmd, CommonOpts& o, bool with_table_opts) {
    cmd->add_option("preset", o.structure, "structure preset: dh2, dh7, or custom");
    cmd->add_option("--structure", o.structure, "structure preset, same as the positional");
    cmd->add_option("--a", o.a, "parameter a as an exact rational, e.g. 3/2");
    cmd->add_option("--b", o.b, "parameter b as an exact rational");
    cmd->add_option("--c", o.c, "parameter c as an exact rational (dh7 only)");
    cmd->add_option("--tensor", o.tensor_path, "path to a custom tensor file");
    if (with_table_opts) {
        cmd->add_option("--rmax", o.rmax, "largest total numerator degree")->check(CLI::NonNegativeNumber);
        cmd->add_option("--complex", o.complexes, "complexes to report: r, p, s, or all");
        cmd->add_option("--format", o.format, "output format: json, markdown, or csv");
        cmd->add_flag("--serial", o.serial, "disable the parallel slice fan-out");
        cmd->add_flag("--no-reps", o.no_reps, "omit representative cochains");
    }
}

[[noreturn]] void usage_error(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    std::exit(kExitUsage);
}

Rational parse_rational_or_die(const std::string& text, const char* name) {
    auto r = Rational::parse(text);
    if (!r) usage_error(std::string("parameter ") + name + " is not an exact rational: " + text);
    return *r;
}

StructureParams make_params(const CommonOpts& o) {
    StructureParams p;
    if (o.structure == "dh2") p.family = Family::DH2;
    else if (o.structure == "dh7") p.family = Family::DH7;
    else if (o.structure == "custom") p.family = Family::Custom;
    else if (o.structure.empty()) usage_error("no structure given (dh2, dh7, or custom)");
    else usage_error("unknown structure: " + o.structure);

    p.a = parse_rational_or_die(o.a, "a");
    p.b = parse_rational_or_die(o.b, "b");
    p.c = parse_rational_or_die(o.c, "c");

    if (p.family == Family::Custom) {
        if (o.tensor_path.empty()) usage_error("custom structure requires --tensor <path>");
        std::ifstream in(o.tensor_path);
        if (!in) usage_error("cannot open tensor file: " + o.tensor_path);
        std::stringstream buf;
        buf << in.rdbuf();
        auto mv = parse_multivector(buf.str());
        if (!mv) usage_error("cannot parse tensor file: " + o.tensor_path);
        if (mv->degree() != 2) usage_error("tensor file must contain a bivector");
        MultiVector self = schouten(*mv, *mv);
        if (!self.is_zero())
            usage_error("tensor is not Poisson: [L,L] = " + self.str());
        p.custom = std::move(*mv);
    }
    return p;
}

ReportFormat format_or_die(const std::string& name) {
    auto f = parse_format(name);
    if (!f) usage_error("unknown format: " + name);
    return *f;
}

std::vector<Cx> complexes_or_die(const std::string& sel) {
    if (sel == "r") return {Cx::R};
    if (sel == "p") return {Cx::P};
    if (sel == "s") return {Cx::S};
    if (sel == "all") return {Cx::P, Cx::R, Cx::S};
    usage_error("unknown complex selection: " + sel);
}

int run_table(const CommonOpts& o, bool verify) {
    StructureParams p = make_params(o);
    TableOptions opt;
    opt.rmax = o.rmax;
    opt.complexes = complexes_or_die(o.complexes);
    opt.verify = verify;
    opt.mode = o.serial ? ExecMode::Serial : ExecMode::Parallel;
    opt.with_reps = !o.no_reps;
    try {
        auto res = compute_table(p, opt);
        std::cout << emit_report(res, format_or_die(o.format));
        if (verify) return res.all_pass ? kExitOk : kExitVerifyFail;
        return kExitOk;
    } catch (const std::domain_error& e) {
        usage_error(e.what());
    }
}

int run_les(const CommonOpts& o) {
    StructureParams p = make_params(o);
    try {
        auto reports = les_sweep(p, o.rmax, o.serial ? ExecMode::Serial : ExecMode::Parallel);
        std::cout << emit_les_report(p, reports, format_or_die(o.format));
        for (const auto& rep : reports)
            if (!rep.exact || !rep.dims_consistent || !rep.dirsum_consistent)
                return kExitVerifyFail;
        return kExitOk;
    } catch (const std::domain_error& e) {
        usage_error(e.what());
    }
}

int run_stabilizer(const CommonOpts& o) {
    StructureParams p = make_params(o);
    MultiVector tensor = build_structure(p);
    auto st = stabilizer(tensor);
    if (o.format == "json") {
        std::ostringstream os;
        os << "{\n  \"dim\": " << st.dim() << ",\n  \"basis\": [";
        for (int v = 0; v < st.dim(); ++v) {
            os << (v ? ", " : "") << "[";
            for (int i = 0; i < 9; ++i) os << (i ? ", " : "") << '"' << st.vectors[v][i].str() << '"';
            os << "]";
        }
        os << "]\n}\n";
        std::cout << os.str();
    } else {
        std::cout << "stabilizer dimension: " << st.dim() << "\n";
        for (int v = 0; v < st.dim(); ++v) {
            std::cout << "basis matrix " << v << ":\n";
            for (int i = 0; i < 3; ++i) {
                std::cout << "  ";
                for (int j = 0; j < 3; ++j) std::cout << st.vectors[v][3 * i + j].str() << (j < 2 ? " " : "\n");
            }
        }
    }
    return kExitOk;
}

int run_yb(const CommonOpts& o) {
    StructureParams p = make_params(o);
    if (p.family == Family::Custom)
        usage_error("rmatrix yb works on the preset families (the canonical bi-matrix is built "
                    "over the commuting frame)");
    auto coeffs = yframe_coeffs(p);
    BiMatrix r = commuting_frame_bimatrix(coeffs);
    auto res = yang_baxter_check(r);
    const bool image_matches = j_wedge(r) == build_structure(p);
    if (o.format == "json") {
        std::cout << "{\n  \"yang_baxter_zero\": " << (res.is_zero ? "true" : "false")
                  << ",\n  \"image_identity\": " << (res.j_identity ? "true" : "false")
                  << ",\n  \"image_matches_structure\": " << (image_matches ? "true" : "false")
                  << ",\n  \"bracket\": \"" << res.bracket.str() << "\"\n}\n";
    } else {
        std::cout << "[r,r] = " << res.bracket.str() << "\n";
        std::cout << "classical Yang-Baxter equation: " << (res.is_zero ? "holds" : "fails") << "\n";
        std::cout << "wedge-image bracket identity: " << (res.j_identity ? "holds" : "fails") << "\n";
        std::cout << "image equals the structure tensor: " << (image_matches ? "yes" : "no") << "\n";
    }
    return (res.is_zero && res.j_identity && image_matches) ? kExitOk : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact slice-by-slice Poisson cohomology of quadratic structures on R^3"};
    app.require_subcommand(1);

    CommonOpts copt, vopt, lopt, sopt, yopt;
    auto* cmd_compute = app.add_subcommand("compute", "compute cohomology tables");
    add_structure_options(cmd_compute, copt, true);
    auto* cmd_verify = app.add_subcommand("verify", "compute and compare against the closed-form tables");
    add_structure_options(cmd_verify, vopt, true);
    auto* cmd_les = app.add_subcommand("les-check", "verify exactness of the long sequence per bigrade");
    add_structure_options(cmd_les, lopt, true);
    auto* cmd_rmatrix = app.add_subcommand("rmatrix", "r-matrix utilities");
    cmd_rmatrix->require_subcommand(1);
    auto* cmd_stab = cmd_rmatrix->add_subcommand("stabilizer", "basis of the infinitesimal symmetries");
    add_structure_options(cmd_stab, sopt, true);
    auto* cmd_yb = cmd_rmatrix->add_subcommand("yb", "classical Yang-Baxter check of the canonical bi-matrix");
    add_structure_options(cmd_yb, yopt, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (cmd_compute->parsed()) return run_table(copt, false);
        if (cmd_verify->parsed()) return run_table(vopt, true);
        if (cmd_les->parsed()) return run_les(lopt);
        if (cmd_stab->parsed()) return run_stabilizer(sopt);
        if (cmd_yb->parsed()) return run_yb(yopt);
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
