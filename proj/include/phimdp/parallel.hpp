#ifndef PHIMDP_PARALLEL_HPP
#define PHIMDP_PARALLEL_HPP

#ifdef _OPENMP
#include <omp.h>
#endif

namespace phimdp {

// Execution policy for the data-parallel kernels. The serial variant is the
// reference implementation; the parallel one must produce bit-identical
// results (each output element is reduced in a fixed order).
enum class Exec { serial, parallel };

inline int thread_count() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

} // namespace phimdp

#endif
