#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace nihocorr::gfpoly {

// Polynomial over GF(p), coefficient of x^i at index i (constant term first).
using Poly = std::vector<std::uint32_t>;

int degree(const Poly& a);
Poly trimmed(Poly a);

Poly add(const Poly& a, const Poly& b, std::uint64_t p);
// product of a and b reduced modulo the monic polynomial f
Poly mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint64_t p);
Poly powmod(Poly base, std::uint64_t e, const Poly& f, std::uint64_t p);
Poly gcd(Poly a, Poly b, std::uint64_t p);

// Rabin test: f monic of degree >= 1 over GF(p)
bool is_irreducible(const Poly& f, std::uint64_t p);

// "x^6+x^5+2" style; terms joined by +/-, coefficients reduced mod p
std::string to_string(const Poly& f);
// Accepts the human string form or a comma-separated constant-first list.
Poly parse(const std::string& text, std::uint64_t p);

}  // namespace nihocorr::gfpoly
