#include "nctorus/parallel.hpp"

#ifdef NCTORUS_HAVE_OPENMP
#include <omp.h>
#endif

namespace nctorus {

void set_thread_count(int threads) {
#ifdef NCTORUS_HAVE_OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#else
  (void)threads;
#endif
}

int thread_count() {
#ifdef NCTORUS_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

bool parallel_enabled() {
#ifdef NCTORUS_HAVE_OPENMP
  return true;
#else
  return false;
#endif
}

}  // namespace nctorus
