#include "nihocorr/factorization.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "nihocorr/errors.hpp"

namespace nihocorr {

std::vector<std::uint64_t> Factorization::primes() const {
    std::vector<std::uint64_t> out;
    out.reserve(factors.size());
    for (const auto& [q, e] : factors) out.push_back(q);
    return out;
}

std::uint64_t Factorization::product() const {
    std::uint64_t prod = 1;
    for (const auto& [q, e] : factors)
        for (unsigned i = 0; i < e; ++i) prod *= q;
    return prod;
}

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t mod) {
    return static_cast<std::uint64_t>((static_cast<__uint128_t>(a) * b) % mod);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    std::uint64_t r = mod > 1 ? 1 : 0;
    base %= mod;
    while (exp) {
        if (exp & 1) r = mulmod_u64(r, base, mod);
        base = mulmod_u64(base, base, mod);
        exp >>= 1;
    }
    return r;
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    unsigned r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    // deterministic Miller-Rabin base set for 64-bit inputs
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (unsigned i = 1; i < r; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Brent's cycle variant; returns a nontrivial factor of composite odd n,
// or 0 once the iteration budget is exhausted.
std::uint64_t brent_rho(std::uint64_t n, std::uint64_t& budget) {
    if (n % 2 == 0) return 2;
    std::uint64_t seed = n;
    while (budget > 0) {
        std::uint64_t y = splitmix64(seed) % (n - 2) + 1;
        std::uint64_t c = splitmix64(seed) % (n - 1) + 1;
        std::uint64_t m = 128, g = 1, r = 1, q = 1, x = 0, ys = 0;
        auto f = [&](std::uint64_t v) { return (mulmod_u64(v, v, n) + c) % n; };
        while (g == 1 && budget > 0) {
            x = y;
            for (std::uint64_t i = 0; i < r && budget > 0; ++i) {
                y = f(y);
                --budget;
            }
            std::uint64_t k = 0;
            while (k < r && g == 1 && budget > 0) {
                ys = y;
                std::uint64_t lim = std::min(m, r - k);
                for (std::uint64_t i = 0; i < lim && budget > 0; ++i) {
                    y = f(y);
                    --budget;
                    q = mulmod_u64(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
                k += lim;
            }
            r *= 2;
        }
        if (g == n) {
            // backtrack one step at a time
            do {
                ys = f(ys);
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n && g != 1) return g;
        // retry with a fresh (y, c) pair
    }
    return 0;
}

void factor_recursive(std::uint64_t n, std::vector<std::uint64_t>& out, std::uint64_t& budget,
                      std::uint64_t original) {
    if (n == 1) return;
    if (is_prime_u64(n)) {
        out.push_back(n);
        return;
    }
    std::uint64_t g = brent_rho(n, budget);
    if (g == 0)
        throw ResourceLimitError("factorization budget exhausted while factoring " +
                                 std::to_string(original) + " (stuck cofactor " + std::to_string(n) + ")");
    factor_recursive(g, out, budget, original);
    factor_recursive(n / g, out, budget, original);
}

}  // namespace

Factorization factorize(std::uint64_t n, std::uint64_t rho_budget) {
    Factorization fac;
    fac.value = n;
    if (n < 2) return fac;
    std::vector<std::uint64_t> primes;
    for (std::uint64_t q = 2; q <= 1000000ULL && q * q <= n; q += (q == 2 ? 1 : 2)) {
        while (n % q == 0) {
            primes.push_back(q);
            n /= q;
        }
    }
    if (n > 1) {
        std::uint64_t budget = rho_budget;
        factor_recursive(n, primes, budget, fac.value);
    }
    std::sort(primes.begin(), primes.end());
    for (std::uint64_t q : primes) {
        if (!fac.factors.empty() && fac.factors.back().first == q)
            ++fac.factors.back().second;
        else
            fac.factors.emplace_back(q, 1u);
    }
    return fac;
}

}  // namespace nihocorr
