#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "nihocorr/factorization.hpp"
#include "nihocorr/gfpoly.hpp"

namespace nihocorr {

// True iff poly is monic of degree n, irreducible over GF(p), and the residue
// of x has multiplicative order p^n-1. The order test uses the prime
// factorization of p^n-1. Throws std::invalid_argument on malformed input
// (non-monic, wrong degree, unreduced coefficients, composite p).
bool validate_primitive(std::uint64_t p, unsigned n, const gfpoly::Poly& poly);

// First monic degree-n primitive polynomial in the deterministic enumeration
// order: coefficient vectors counted with the constant term varying fastest.
gfpoly::Poly find_primitive_poly(std::uint64_t p, unsigned n);

class FieldElement;

// GF(p^n) with a validated primitive defining polynomial. Elements are packed
// coefficient vectors: value = sum coeffs[i] * p^i, so 0 is the zero element
// and values below p are the prime subfield. Immutable after construction;
// safe for concurrent use.
class Field {
public:
    using Elem = std::uint64_t;

    // Full log/antilog tables are built below this field size; larger fields
    // fall back to polynomial arithmetic with square-and-multiply.
    static constexpr std::uint64_t kTableLimit = std::uint64_t(1) << 22;

    Field(std::uint64_t p, unsigned n, gfpoly::Poly poly);
    static Field with_discovered_poly(std::uint64_t p, unsigned n);

    std::uint64_t p() const { return p_; }
    unsigned n() const { return n_; }
    unsigned m() const;  // half degree; requires even n
    std::uint64_t size() const { return size_; }
    std::uint64_t order() const { return order_; }
    const gfpoly::Poly& poly() const { return poly_; }
    const Factorization& order_factorization() const { return order_factorization_; }
    bool has_tables() const { return !exp_.empty(); }

    std::vector<std::uint32_t> coeffs(Elem a) const;
    Elem from_coeffs(const std::vector<std::uint32_t>& c) const;

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem minus_one() const { return p_ - 1; }
    Elem alpha() const { return alpha_; }

    Elem from_exp(std::uint64_t e) const;               // alpha^e
    std::optional<std::uint64_t> log(Elem a) const;     // exponent of a nonzero element (tables only)

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;        // table path when available, else polynomial path
    Elem mul_table(Elem a, Elem b) const;  // requires has_tables()
    Elem mul_poly(Elem a, Elem b) const;   // always available
    Elem inv(Elem a) const;                // std::domain_error on zero
    Elem pow(Elem a, std::int64_t e) const;
    Elem frobenius(Elem a, unsigned k = 1) const;  // a^(p^k)

    // Tr^n_m: sum of the n/m Frobenius conjugates; result lies in GF(p^m).
    Elem trace(Elem a, unsigned to_m) const;
    std::uint32_t trace_to_prime(Elem a) const;
    // traces of the basis elements 1, x, ..., x^(n-1) down to GF(p)
    const std::vector<std::uint32_t>& trace_basis() const { return trace_basis_; }

    // the p^m+1 solutions of x^(p^m+1) = 1, as alpha^(j(p^m-1)) for j = 0..p^m
    std::vector<Elem> unit_circle() const;

    FieldElement element(Elem a) const;
    FieldElement element_from_exp(std::uint64_t e) const;

private:
    std::uint64_t p_ = 0;
    unsigned n_ = 0;
    std::uint64_t size_ = 0;
    std::uint64_t order_ = 0;
    gfpoly::Poly poly_;
    Factorization order_factorization_;
    Elem alpha_ = 0;
    std::vector<std::uint32_t> trace_basis_;
    // exp_[e] = alpha^e packed; log_[a] = e for nonzero a, order_ marks zero
    std::vector<Elem> exp_;
    std::vector<std::uint64_t> log_;

    void build_tables();
    std::uint64_t exponent_mod_order(std::int64_t e) const;
};

// Checked element wrapper: operations require both operands to belong to the
// same field and throw std::invalid_argument otherwise. The field must
// outlive its elements.
class FieldElement {
public:
    FieldElement(const Field& field, Field::Elem value) : field_(&field), value_(value) {}

    const Field& field() const { return *field_; }
    Field::Elem value() const { return value_; }
    bool is_zero() const { return value_ == 0; }
    std::vector<std::uint32_t> coeffs() const { return field_->coeffs(value_); }
    std::optional<std::uint64_t> exp() const { return field_->log(value_); }

    FieldElement pow(std::int64_t e) const { return {*field_, field_->pow(value_, e)}; }
    FieldElement inverse() const { return {*field_, field_->inv(value_)}; }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
        require_same(a, b);
        return {*a.field_, a.field_->add(a.value_, b.value_)};
    }
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
        require_same(a, b);
        return {*a.field_, a.field_->sub(a.value_, b.value_)};
    }
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
        require_same(a, b);
        return {*a.field_, a.field_->mul(a.value_, b.value_)};
    }
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
        require_same(a, b);
        return {*a.field_, a.field_->mul(a.value_, b.field_->inv(b.value_))};
    }
    friend FieldElement operator-(const FieldElement& a) { return {*a.field_, a.field_->neg(a.value_)}; }
    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        require_same(a, b);
        return a.value_ == b.value_;
    }

private:
    static void require_same(const FieldElement& a, const FieldElement& b);

    const Field* field_;
    Field::Elem value_;
};

}  // namespace nihocorr
