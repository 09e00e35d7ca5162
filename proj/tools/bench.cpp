// Benchmark of the OpenMP kernels against their serial reference twins.
// Build and run:  cmake --build build --target hdsbench && ./build/hdsbench

#include <chrono>
#include <cstdio>
#include <thread>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "hdsbranch/branching.hpp"

using namespace hdsb;
using Clock = std::chrono::steady_clock;

namespace {

template <typename F>
double time_ms(F&& f, int reps = 3) {
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        auto t0 = Clock::now();
        f();
        auto t1 = Clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

void report(const char* name, double serial_ms, double parallel_ms, bool equal) {
    std::printf("%-28s serial %9.2f ms   parallel %9.2f ms   speedup %5.2fx   %s\n", name,
                serial_ms, parallel_ms, serial_ms / parallel_ms, equal ? "match" : "MISMATCH");
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d (hardware concurrency %u)\n",
                omp_get_max_threads(), std::thread::hardware_concurrency());
#else
    std::printf("OpenMP disabled; both columns run the serial path\n");
#endif

    RootSystem c3 = build_root_system({{FactorType::C, 3}});
    FormalCharacter big = irreducible_character(c3, Weight::from_plain({8, 4, 2}));
    FormalCharacter big2 = irreducible_character(c3, Weight::from_plain({6, 4, 0}));

    FormalCharacter ts, tp;
    double s1 = time_ms([&] { ts = reference::tensor_character(big, big2); });
    double p1 = time_ms([&] { tp = tensor_character(big, big2); });
    report("tensor_character", s1, p1, ts == tp);

    Decomposition ds, dp;
    double s2 = time_ms([&] { ds = reference::decompose_by_alternating_sum(c3, ts); });
    double p2 = time_ms([&] { dp = decompose_by_alternating_sum(c3, ts); });
    report("decompose_alternating_sum", s2, p2, ds == dp);

    HermitianPair pair = Catalog::builtin().pair("sp3R:k");
    Weight hw = Weight::from_plain({-1, -2, -4});
    MultiplicityTable bs, bp;
    double s3 = time_ms([&] { bs = reference::hds_branch(pair, hw, 14); }, 1);
    double p3 = time_ms([&] { bp = hds_branch(pair, hw, 14); }, 1);
    report("hds_branch (sp3R:k, d<=14)", s3, p3, bs.entries == bp.entries);

    return 0;
}
