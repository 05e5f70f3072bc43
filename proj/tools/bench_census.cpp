// Times the OpenMP census kernel against the serial reference and checks
// that both produce identical records.
//
//   bench_census [n] [max_workers]

#include <omp.h>

#include <cstdio>
#include <cstdlib>

#include "zknead/census.hpp"

using namespace zknead;

namespace {

bool same_records(const std::vector<CycleRecord>& a, const std::vector<CycleRecord>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].sum != b[i].sum || a[i].caliber != b[i].caliber ||
            a[i].parity != b[i].parity || a[i].alternant != b[i].alternant ||
            a[i].content != b[i].content || !(a[i].primitive == b[i].primitive) ||
            a[i].representative != b[i].representative)
            return false;
    }
    return true;
}

} // namespace

int main(int argc, char** argv) {
    const std::int64_t n = argc > 1 ? std::atoll(argv[1]) : 22;
    const int max_workers = argc > 2 ? std::atoi(argv[2]) : omp_get_max_threads();

    std::printf("census of the %lld compositions of n=%lld\n",
                static_cast<long long>(1LL << (n - 1)), static_cast<long long>(n));

    double t0 = omp_get_wtime();
    auto reference = cycle_census_serial(n);
    double serial_time = omp_get_wtime() - t0;
    std::printf("%-22s %8.3f s   (%zu cycles)\n", "serial reference", serial_time,
                reference.size());

    for (int w = 1; w <= max_workers; w *= 2) {
        CensusOptions opt;
        opt.workers = w;
        t0 = omp_get_wtime();
        auto parallel = cycle_census(n, opt);
        double t = omp_get_wtime() - t0;
        const bool ok = same_records(reference, parallel);
        std::printf("kernel, %2d worker(s)   %8.3f s   speedup %5.2fx   %s\n", w, t,
                    serial_time / t, ok ? "records match" : "RECORD MISMATCH");
        if (!ok) return 1;
    }
    return 0;
}
