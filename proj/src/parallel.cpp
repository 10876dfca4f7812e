#include "adelic/parallel.hpp"

#include <cstdlib>
#include <thread>

namespace adelic {

int thread_budget() {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw < 1) hw = 1;
    if (const char* env = std::getenv("ADELIC_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1) return n;
    }
    return hw;
}

}  // namespace adelic
