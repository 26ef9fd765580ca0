#pragma once

#include <cstdint>
#include <vector>

#include "bigint.hpp"

namespace batlas {

struct FactorConfig {
    uint32_t trial_bound = 1000000;   // sieve bound for trial division (clamped to 10^6)
    uint64_t rho_iter_cap = 10000000; // total Brent-rho iterations per number
};

// Prime factors of |n| with multiplicities, ascending. Cofactors the method
// could not resolve are returned in `unresolved` (composite, pairwise tested),
// never silently dropped. Primality of large cofactors is Miller-Rabin based.
struct IntFactorization {
    int sign = 1;
    std::vector<std::pair<BigInt, unsigned>> primes;
    std::vector<BigInt> unresolved;

    bool complete() const { return unresolved.empty(); }
};

IntFactorization factor_integer(const BigInt& n, const FactorConfig& cfg = {});

bool is_probable_prime(const BigInt& n);

const std::vector<uint32_t>& primes_to_million();

}  // namespace batlas
