// Compares the serial reference path with the OpenMP fan-out over bigrades
// and checks that both produce the same table.
#include <omp.h>

#include <chrono>
#include <iostream>
#include <string>

#include "pcoh/report.hpp"
#include "pcoh/table.hpp"

using namespace pcoh;

namespace {

double run_once(const StructureParams& p, int rmax, ExecMode mode,
                std::vector<ParsedSlice>& dims) {
    TableOptions opt;
    opt.rmax = rmax;
    opt.complexes = {Cx::P, Cx::R, Cx::S};
    opt.mode = mode;
    opt.with_reps = false;
    auto t0 = std::chrono::steady_clock::now();
    auto res = compute_table(p, opt);
    auto t1 = std::chrono::steady_clock::now();
    dims = dims_of(res);
    return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    int rmax = 12;
    if (argc > 1) rmax = std::max(0, std::atoi(argv[1]));

    const StructureParams cases[] = {
        {Family::DH2, Rational(1), Rational(1), Rational(0), std::nullopt},
        {Family::DH2, Rational(0), Rational(1), Rational(0), std::nullopt},
        {Family::DH7, Rational(0), Rational(-1), Rational(4), std::nullopt},
    };
    const char* labels[] = {"dh2 a=1 b=1", "dh2 a=0 b=1", "dh7 a=0 b=-1 c=4"};

    std::cout << "threads: " << omp_get_max_threads() << ", rmax: " << rmax << "\n";
    std::cout << "structure            serial[s]  parallel[s]  speedup  identical\n";
    bool all_same = true;
    for (int i = 0; i < 3; ++i) {
        std::vector<ParsedSlice> ds, dp;
        double ts = run_once(cases[i], rmax, ExecMode::Serial, ds);
        double tp = run_once(cases[i], rmax, ExecMode::Parallel, dp);
        bool same = ds == dp;
        all_same = all_same && same;
        std::printf("%-20s %9.3f %12.3f %8.2f  %s\n", labels[i], ts, tp,
                    tp > 0 ? ts / tp : 0.0, same ? "yes" : "NO");
    }
    if (!all_same) {
        std::cerr << "parallel and serial tables disagree\n";
        return 1;
    }
    return 0;
}
