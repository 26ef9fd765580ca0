#include "intfactor.hpp"

#include <algorithm>

namespace batlas {

const std::vector<uint32_t>& primes_to_million() {
    static const std::vector<uint32_t> primes = [] {
        const uint32_t bound = 1000000;
        std::vector<bool> comp(bound + 1, false);
        std::vector<uint32_t> out;
        for (uint32_t i = 2; i <= bound; ++i) {
            if (!comp[i]) {
                out.push_back(i);
                for (uint64_t j = static_cast<uint64_t>(i) * i; j <= bound; j += i) comp[j] = true;
            }
        }
        return out;
    }();
    return primes;
}

namespace {

// Products of prime blocks; gcd against a block tells whether any prime of the
// block divides the cofactor without dividing one by one.
struct PrimeBlocks {
    size_t block = 512;
    std::vector<BigInt> products;   // products[k] = prod of primes[k*block .. )
    const std::vector<uint32_t>& primes;

    PrimeBlocks() : primes(primes_to_million()) {
        for (size_t i = 0; i < primes.size(); i += block) {
            BigInt prod(1);
            for (size_t j = i; j < std::min(i + block, primes.size()); ++j)
                prod *= BigInt(static_cast<unsigned long long>(primes[j]));
            products.push_back(prod);
        }
    }
};

const PrimeBlocks& prime_blocks() {
    static const PrimeBlocks pb;
    return pb;
}

bool mr_witness(const BigInt& n, const BigInt& nm1, const BigInt& d, int s, const BigInt& a) {
    // returns true if a certifies n composite
    BigInt x(1), base = a % n, e = d;
    while (!e.is_zero()) {
        if (e.odd()) x = (x * base) % n;
        base = (base * base) % n;
        e = e / BigInt(2);
    }
    if (x == BigInt(1) || x == nm1) return false;
    for (int i = 1; i < s; ++i) {
        x = (x * x) % n;
        if (x == nm1) return false;
    }
    return true;
}

BigInt brent_rho(const BigInt& n, uint64_t iter_cap) {
    // Brent's cycle variant of Pollard rho with batched gcds; deterministic.
    for (unsigned long long c = 1; c <= 24; ++c) {
        BigInt y(2), g(1), q(1), x, ys;
        const BigInt cc(c);
        uint64_t r = 1, used = 0;
        const uint64_t batch = 128;
        while (g.is_one() && used < iter_cap) {
            x = y;
            for (uint64_t i = 0; i < r && used < iter_cap; ++i) {
                y = (y * y + cc) % n;
                ++used;
            }
            uint64_t k = 0;
            while (k < r && g.is_one() && used < iter_cap) {
                ys = y;
                uint64_t lim = std::min(batch, r - k);
                for (uint64_t i = 0; i < lim; ++i) {
                    y = (y * y + cc) % n;
                    BigInt diff = x - y;
                    if (diff.is_zero()) continue;
                    q = (q * diff.abs()) % n;
                    ++used;
                }
                g = BigInt::gcd(q, n);
                k += lim;
            }
            r *= 2;
        }
        if (g == n) {
            // backtrack one step at a time
            g = BigInt(1);
            for (uint64_t back = 0; g.is_one() && back < (1u << 20); ++back) {
                ys = (ys * ys + cc) % n;
                g = BigInt::gcd((x - ys).abs(), n);
            }
        }
        if (!g.is_one() && g != n) return g;
        if (used >= iter_cap) break;
    }
    return BigInt();  // gave up
}

void factor_rec(const BigInt& n, uint64_t iter_cap, IntFactorization& out) {
    if (n.is_one()) return;
    if (is_probable_prime(n)) {
        out.primes.push_back({n, 1});
        return;
    }
    BigInt d = brent_rho(n, iter_cap);
    if (d.is_zero() || d.is_one() || d == n) {
        out.unresolved.push_back(n);
        return;
    }
    factor_rec(d, iter_cap, out);
    factor_rec(n.divexact(d), iter_cap, out);
}

}  // namespace

bool is_probable_prime(const BigInt& n_in) {
    BigInt n = n_in.abs();
    if (n < BigInt(2)) return false;
    if (n.fits_u64()) return is_prime_u64(n.abs_u64());
    for (uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u})
        if (n.mod_u32(p) == 0) return false;
    BigInt nm1 = n - BigInt(1);
    BigInt d = nm1;
    int s = 0;
    while (!d.odd()) {
        d = d / BigInt(2);
        ++s;
    }
    // Fixed bases: deterministic below 3.3e24, strong probable-prime test beyond.
    for (unsigned long long a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL,
                                 29ULL, 31ULL, 37ULL, 41ULL, 2718281828ULL, 3141592653ULL}) {
        if (mr_witness(n, nm1, d, s, BigInt(a))) return false;
    }
    return true;
}

IntFactorization factor_integer(const BigInt& n_in, const FactorConfig& cfg) {
    if (n_in.is_zero()) throw std::domain_error("factor_integer: zero");
    IntFactorization out;
    out.sign = n_in.sign();
    BigInt n = n_in.abs();
    if (n.is_one()) return out;

    const auto& primes = primes_to_million();
    uint32_t bound = std::min<uint32_t>(cfg.trial_bound, 1000000);

    // Small primes first, then gcd against precomputed blocks for the rest.
    size_t idx = 0;
    for (; idx < primes.size() && primes[idx] <= std::min<uint32_t>(bound, 2000); ++idx) {
        uint32_t p = primes[idx];
        unsigned mult = 0;
        while (n.mod_u32(p) == 0) {
            n = n.divexact(BigInt(static_cast<unsigned long long>(p)));
            ++mult;
        }
        if (mult) out.primes.push_back({BigInt(static_cast<unsigned long long>(p)), mult});
    }
    if (!n.is_one()) {
        const PrimeBlocks& pb = prime_blocks();
        for (size_t blk = idx / pb.block; blk < pb.products.size(); ++blk) {
            size_t lo = blk * pb.block;
            if (primes[lo] > bound) break;
            if (n.is_one()) break;
            BigInt g = BigInt::gcd(n, pb.products[blk]);
            if (g.is_one()) continue;
            size_t hi = std::min(lo + pb.block, primes.size());
            for (size_t i = std::max(lo, idx); i < hi && primes[i] <= bound; ++i) {
                uint32_t p = primes[i];
                unsigned mult = 0;
                while (n.mod_u32(p) == 0) {
                    n = n.divexact(BigInt(static_cast<unsigned long long>(p)));
                    ++mult;
                }
                if (mult) out.primes.push_back({BigInt(static_cast<unsigned long long>(p)), mult});
            }
        }
    }

    if (!n.is_one()) {
        // Cofactor below bound^2 with no factor <= bound is prime.
        BigInt b2 = BigInt(static_cast<unsigned long long>(bound)) * BigInt(static_cast<unsigned long long>(bound));
        if (n < b2) {
            out.primes.push_back({n, 1});
        } else {
            IntFactorization rest;
            factor_rec(n, cfg.rho_iter_cap, rest);
            for (auto& pr : rest.primes) out.primes.push_back(pr);
            for (auto& u : rest.unresolved) out.unresolved.push_back(u);
        }
    }

    // Merge duplicates (rho may emit the same prime repeatedly), sort ascending.
    std::sort(out.primes.begin(), out.primes.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<BigInt, unsigned>> merged;
    for (auto& pr : out.primes) {
        if (!merged.empty() && merged.back().first == pr.first)
            merged.back().second += pr.second;
        else
            merged.push_back(pr);
    }
    out.primes = std::move(merged);
    return out;
}

}  // namespace batlas
