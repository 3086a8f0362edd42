// bench_sweeps.cpp -- times the serial reference drivers against the
// OpenMP kernels on the heavy sweeps.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "tmpat/sweeps.hpp"
#include "tmpat/thue_morse.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace tmpat;
using sweeps::Mode;

namespace {

double time_of(const std::function<void()>& fn) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

} // namespace

int main(int argc, char** argv) {
    const bool full = argc > 1 && std::string_view(argv[1]) == "--full";

    struct Row {
        std::string name;
        std::function<void(Mode)> run;
    };

    const std::size_t repetition_len = full ? (std::size_t{1} << 16) : (std::size_t{1} << 15);
    const std::size_t equivalence_len = full ? 14 : 12;
    const std::size_t square_len = full ? 24 : 20;
    const std::size_t atypical_len = full ? 8 : 7;
    const int atypical_bound = full ? 8 : 7;
    const std::size_t oracle_len = full ? 16 : 14;
    const std::size_t oracle_prefix = full ? (std::size_t{1} << 20) : (std::size_t{1} << 18);

    const std::vector<Row> rows = {
        {"repetition scan, prefix " + std::to_string(repetition_len),
         [&](Mode m) { (void)sweeps::repetition_sweep(repetition_len, m); }},
        {"oracle equivalence, len<=" + std::to_string(oracle_len),
         [&](Mode m) { (void)sweeps::oracle_equivalence_sweep(oracle_len, oracle_prefix, m); }},
        {"unavoidability equivalence, len<=" + std::to_string(equivalence_len),
         [&](Mode m) { (void)sweeps::unavoidability_equivalence_sweep(equivalence_len, m); }},
        {"square roots, len<=" + std::to_string(square_len),
         [&](Mode m) { (void)sweeps::square_root_sweep(square_len, m); }},
        {"atypical completeness, len<=" + std::to_string(atypical_len) + " bound " +
             std::to_string(atypical_bound),
         [&](Mode m) { (void)sweeps::atypical_completeness_sweep(atypical_len, atypical_bound, m); }},
        {"divergence, shifts<=64", [&](Mode m) { (void)sweeps::divergence_sweep(64, 4096, m); }},
    };

#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; parallel mode runs serially\n");
#endif

    tm_prefix(oracle_prefix); // warm the shared prefix cache outside the timings

    std::printf("%-48s %10s %10s %8s\n", "sweep", "serial", "parallel", "speedup");
    for (const Row& row : rows) {
        const double serial = time_of([&] { row.run(Mode::serial); });
        const double parallel = time_of([&] { row.run(Mode::parallel); });
        std::printf("%-48s %9.3fs %9.3fs %7.2fx\n", row.name.c_str(), serial, parallel,
                    parallel > 0 ? serial / parallel : 0.0);
        std::fflush(stdout);
    }
    return 0;
}
