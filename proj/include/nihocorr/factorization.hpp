#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace nihocorr {

struct Factorization {
    std::uint64_t value = 1;
    // (prime, multiplicity), primes ascending
    std::vector<std::pair<std::uint64_t, unsigned>> factors;

    std::vector<std::uint64_t> primes() const;
    std::uint64_t product() const;
};

bool is_prime_u64(std::uint64_t n);

inline constexpr std::uint64_t kDefaultRhoBudget = std::uint64_t(1) << 26;

// Trial division up to 10^6, then Brent-cycle Pollard rho for what remains.
// rho_budget caps total rho iterations; throws ResourceLimitError when the
// budget runs out before the cofactor is fully split.
Factorization factorize(std::uint64_t n, std::uint64_t rho_budget = kDefaultRhoBudget);

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t mod);
std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

}  // namespace nihocorr
