// parallel.hpp — worker-count resolution for the OpenMP kernels

#pragma once

#include <algorithm>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fiberising {

// Number of workers for parallel regions: the OpenMP default, capped by the
// FIBERISING_THREADS environment variable when set.
inline int thread_cap() {
#ifdef _OPENMP
    int n = omp_get_max_threads();
    if (const char* env = std::getenv("FIBERISING_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && v >= 1) n = static_cast<int>(std::min<long>(n, v));
    }
    return std::max(1, n);
#else
    return 1;
#endif
}

}  // namespace fiberising
