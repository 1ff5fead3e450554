#include "nihocorr/gfpoly.hpp"

#include <cctype>
#include <stdexcept>

#include "nihocorr/factorization.hpp"

namespace nihocorr::gfpoly {

int degree(const Poly& a) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (a[static_cast<std::size_t>(i)] != 0) return i;
    return -1;
}

Poly trimmed(Poly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

Poly add(const Poly& a, const Poly& b, std::uint64_t p) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::uint64_t v = (i < a.size() ? a[i] : 0u) + static_cast<std::uint64_t>(i < b.size() ? b[i] : 0u);
        r[i] = static_cast<std::uint32_t>(v % p);
    }
    return trimmed(std::move(r));
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint64_t p) {
    const std::size_t n = f.size() - 1;  // f monic, degree n
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint64_t> prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            prod[i + j] = (prod[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p;
        }
    }
    for (std::size_t deg = prod.size(); deg-- > n;) {
        std::uint64_t c = prod[deg];
        if (c == 0) continue;
        prod[deg] = 0;
        for (std::size_t k = 0; k < n; ++k) {
            // subtract c * f[k] * x^(deg-n+k)
            std::uint64_t sub = (c * f[k]) % p;
            std::uint64_t& slot = prod[deg - n + k];
            slot = (slot + p - sub) % p;
        }
    }
    Poly r(n, 0);
    for (std::size_t i = 0; i < n && i < prod.size(); ++i) r[i] = static_cast<std::uint32_t>(prod[i]);
    return trimmed(std::move(r));
}

Poly powmod(Poly base, std::uint64_t e, const Poly& f, std::uint64_t p) {
    Poly r{1};
    while (e) {
        if (e & 1) r = mulmod(r, base, f, p);
        base = mulmod(base, base, f, p);
        e >>= 1;
    }
    return r;
}

namespace {

// divide in place: a = q*b + r, returns r; b nonzero
Poly rem(Poly a, const Poly& b, std::uint64_t p) {
    a = trimmed(std::move(a));
    Poly bb = trimmed(b);
    const int db = degree(bb);
    const std::uint64_t lead_inv = powmod_u64(bb[static_cast<std::size_t>(db)], p - 2, p);
    while (degree(a) >= db) {
        const int da = degree(a);
        std::uint64_t c = (static_cast<std::uint64_t>(a[static_cast<std::size_t>(da)]) * lead_inv) % p;
        for (int k = 0; k <= db; ++k) {
            std::uint64_t sub = (c * bb[static_cast<std::size_t>(k)]) % p;
            std::uint32_t& coeff = a[static_cast<std::size_t>(da - db + k)];
            coeff = static_cast<std::uint32_t>((coeff + p - sub) % p);
        }
        a = trimmed(std::move(a));
        if (a.empty()) break;
    }
    return a;
}

}  // namespace

Poly gcd(Poly a, Poly b, std::uint64_t p) {
    a = trimmed(std::move(a));
    b = trimmed(std::move(b));
    while (!b.empty()) {
        Poly r = rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    // normalize monic
    if (!a.empty() && a.back() != 1) {
        std::uint64_t inv = powmod_u64(a.back(), p - 2, p);
        for (auto& c : a) c = static_cast<std::uint32_t>((c * inv) % p);
    }
    return a;
}

bool is_irreducible(const Poly& f, std::uint64_t p) {
    const int n = degree(f);
    if (n < 1) return false;
    if (n == 1) return true;
    const Poly x{0, 1};
    // h_i = x^(p^i) mod f by repeated Frobenius
    Poly h = x;
    std::vector<Poly> frob(static_cast<std::size_t>(n) + 1);
    frob[0] = x;
    for (int i = 1; i <= n; ++i) {
        h = powmod(h, p, f, p);
        frob[static_cast<std::size_t>(i)] = h;
    }
    if (trimmed(frob[static_cast<std::size_t>(n)]) != trimmed(x)) return false;
    // for each prime q | n: gcd(x^(p^(n/q)) - x, f) must be constant
    for (int q = 2; q <= n; ++q) {
        if (n % q != 0) continue;
        bool q_prime = true;
        for (int t = 2; t * t <= q; ++t)
            if (q % t == 0) q_prime = false;
        if (!q_prime) continue;
        Poly diff = frob[static_cast<std::size_t>(n / q)];
        // diff -= x
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = static_cast<std::uint32_t>((diff[1] + p - 1) % p);
        diff = trimmed(std::move(diff));
        if (degree(gcd(diff, f, p)) > 0) return false;
    }
    return true;
}

std::string to_string(const Poly& f) {
    std::string out;
    for (int i = degree(f); i >= 0; --i) {
        std::uint32_t c = f[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0) {
            out += std::to_string(c);
        } else {
            if (c != 1) out += std::to_string(c);
            out += (i == 1) ? "x" : "x^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

namespace {

void set_coeff(Poly& f, std::size_t exp, std::uint64_t c, std::uint64_t p) {
    if (f.size() <= exp) f.resize(exp + 1, 0);
    f[exp] = static_cast<std::uint32_t>((f[exp] + c) % p);
}

Poly parse_terms(const std::string& text, std::uint64_t p) {
    Poly f;
    std::size_t i = 0;
    const auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    bool first = true;
    while (true) {
        skip_ws();
        if (i >= text.size()) break;
        std::int64_t sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
        } else if (!first) {
            throw std::invalid_argument("malformed polynomial: expected '+' or '-' in \"" + text + "\"");
        }
        first = false;
        skip_ws();
        std::uint64_t coeff = 1;
        bool have_digits = false;
        std::uint64_t num = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            num = num * 10 + static_cast<std::uint64_t>(text[i] - '0');
            if (num > (std::uint64_t(1) << 62)) throw std::invalid_argument("coefficient overflow");
            have_digits = true;
            ++i;
        }
        if (have_digits) coeff = num;
        skip_ws();
        if (i < text.size() && text[i] == '*') {
            ++i;
            skip_ws();
        }
        std::size_t exp = 0;
        if (i < text.size() && (text[i] == 'x' || text[i] == 'X')) {
            ++i;
            exp = 1;
            skip_ws();
            if (i < text.size() && text[i] == '^') {
                ++i;
                skip_ws();
                if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
                    throw std::invalid_argument("malformed exponent in \"" + text + "\"");
                std::uint64_t e = 0;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                    e = e * 10 + static_cast<std::uint64_t>(text[i] - '0');
                    if (e > 4096) throw std::invalid_argument("exponent too large");
                    ++i;
                }
                exp = static_cast<std::size_t>(e);
            }
        } else if (!have_digits) {
            throw std::invalid_argument("malformed term in \"" + text + "\"");
        }
        std::uint64_t c = coeff % p;
        if (sign < 0) c = (p - c) % p;
        set_coeff(f, exp, c, p);
    }
    if (f.empty()) throw std::invalid_argument("empty polynomial");
    return f;
}

Poly parse_list(const std::string& text, std::uint64_t p) {
    Poly f;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::string piece = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        std::size_t a = piece.find_first_not_of(" \t");
        std::size_t b = piece.find_last_not_of(" \t");
        if (a == std::string::npos) throw std::invalid_argument("empty entry in coefficient list");
        piece = piece.substr(a, b - a + 1);
        std::uint64_t v = 0;
        for (char ch : piece) {
            if (!std::isdigit(static_cast<unsigned char>(ch)))
                throw std::invalid_argument("bad coefficient \"" + piece + "\"");
            v = v * 10 + static_cast<std::uint64_t>(ch - '0');
            if (v > (std::uint64_t(1) << 62)) throw std::invalid_argument("coefficient overflow");
        }
        f.push_back(static_cast<std::uint32_t>(v % p));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return f;
}

}  // namespace

Poly parse(const std::string& text, std::uint64_t p) {
    if (p < 2) throw std::invalid_argument("modulus must be at least 2");
    if (text.find('x') != std::string::npos || text.find('X') != std::string::npos)
        return parse_terms(text, p);
    return parse_list(text, p);
}

}  // namespace nihocorr::gfpoly
