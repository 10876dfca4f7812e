#ifndef ADELIC_PRIMES_HPP
#define ADELIC_PRIMES_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "adelic/rational.hpp"

namespace adelic {

/// Deterministic primality test: trial division for small n, then
/// Miller-Rabin with a witness set proven complete below 3.3e24.
/// Larger inputs fall back to a 40-round probabilistic check.
bool is_prime(const Int& n);

/// Complete factorization of |n| (n != 0, |n| > 1 yields factors;
/// |n| = 1 yields an empty map). Trial division up to 1e6, then
/// Pollard rho with Miller-Rabin on the cofactors.
std::map<Int, unsigned> factorize(const Int& n);

/// Union of prime factors of numerator and denominator.
std::vector<Int> prime_support(const Rat& q);

}  // namespace adelic

#endif
