#include "cci/threads.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cci {

int apply_thread_env() {
    int cap = 0;
    if (const char* env = std::getenv("CCI_THREADS")) {
        try {
            cap = std::stoi(env);
        } catch (...) {
            cap = 0;
        }
        if (cap < 0) cap = 0;
    }
#ifdef _OPENMP
    if (cap > 0) omp_set_num_threads(cap);
#endif
    return cap;
}

} // namespace cci
