#ifndef ADELIC_PARALLEL_HPP
#define ADELIC_PARALLEL_HPP

#include <cstdint>

namespace adelic {

/// Thread cap for the OpenMP kernels: ADELIC_THREADS if set, otherwise the
/// hardware count. Always at least 1.
int thread_budget();

/// splitmix64 step; used to derive per-cell and per-chunk seeds so that
/// results are independent of the parallel schedule.
inline uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

/// Stateless hash of (seed, index) for chunked deterministic sampling.
inline uint64_t mix_seed(uint64_t seed, uint64_t index) {
    uint64_t s = seed ^ (0x9e3779b97f4a7c15ull + index * 0xbf58476d1ce4e5b9ull);
    splitmix64(s);
    return splitmix64(s);
}

/// xoshiro-style uniform double in [0, 1).
inline double u01(uint64_t& state) {
    return static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53;
}

}  // namespace adelic

#endif
