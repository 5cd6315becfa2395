// Benchmark: serial reference kernel vs the OpenMP sample scan.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>

#include "beanbound/search.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace beanbound;

namespace {

double time_run(const SearchConfig& cfg, ExecMode mode) {
    const auto t0 = std::chrono::steady_clock::now();
    (void)maximize_functional(cfg, mode);
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

} // namespace

int main(int argc, char** argv) {
    uint64_t samples = 500000;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--quick") == 0) samples = 20000;

#ifdef _OPENMP
    std::printf("threads: %d, samples per functional: %llu\n", omp_get_max_threads(),
                static_cast<unsigned long long>(samples));
#else
    std::printf("built without OpenMP; samples per functional: %llu\n",
                static_cast<unsigned long long>(samples));
#endif
    std::printf("%-18s %12s %12s %9s\n", "functional", "serial[s]", "parallel[s]", "speedup");

    for (const char* id : {"gamma2", "gamma4", "hankel_log", "hankel_inv_log", "zalcman23"}) {
        SearchConfig cfg;
        cfg.seed = 1;
        cfg.samples = samples;
        cfg.refine_iters = 0;
        cfg.include_extremals = false;
        cfg.functional_id = id;
        const double ts = time_run(cfg, ExecMode::serial);
        const double tp = time_run(cfg, ExecMode::parallel);
        std::printf("%-18s %12.3f %12.3f %8.2fx\n", id, ts, tp, ts / tp);
    }
    return 0;
}
