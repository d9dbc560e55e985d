#include "bellcert/parallel.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bellcert {

int effective_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

int apply_thread_cap_from_env() {
#ifdef _OPENMP
  if (const char* env = std::getenv("BELLCERT_THREADS")) {
    int cap = std::atoi(env);
    if (cap >= 1) omp_set_num_threads(cap);
  }
#endif
  return effective_threads();
}

}  // namespace bellcert
