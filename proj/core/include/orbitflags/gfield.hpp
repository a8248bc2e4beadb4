#pragma once

#include <cstdint>
#include <vector>

#include "orbitflags/errors.hpp"

namespace orbitflags {

/// An element of F_{q^n}. Nonzero elements are stored as the discrete log
/// with respect to the primitive element alpha chosen by the field context;
/// zero is a separate state. Elements carry no reference to their field, so
/// all arithmetic goes through FieldCtx.
class FieldElement {
public:
    constexpr FieldElement() = default; // zero

    bool is_zero() const noexcept { return exp_ < 0; }

    /// Discrete log in [0, q^n - 1). Throws InvalidArgument for zero.
    std::int64_t exponent() const {
        if (exp_ < 0) throw InvalidArgument("zero has no exponent");
        return exp_;
    }

    friend constexpr bool operator==(FieldElement, FieldElement) noexcept = default;

private:
    friend class FieldCtx;
    explicit constexpr FieldElement(std::int64_t e) noexcept : exp_(e) {}

    std::int64_t exp_ = -1;
};

/// The field F_{q^n} with q = p^e, realized as F_q[x]/(f) for a modulus f
/// chosen deterministically: the lexicographically smallest primitive monic
/// polynomial of degree n over F_q, where coefficient vectors are compared
/// low degree first and F_q itself is built the same way from the smallest
/// irreducible monic polynomial of degree e over F_p.
///
/// Construction precomputes log/antilog tables of size q^n - 1, so p^(e*n)
/// is capped at 2^24. The object is immutable after construction and safe
/// to share across threads; it is neither copyable nor movable, so keep it
/// alive for as long as elements, subspaces or flags built on it exist.
///
/// Coordinate vectors are with respect to the basis {1, alpha, ...,
/// alpha^(n-1)}. Entries are F_q elements encoded as integers in [0, q):
/// the encoding of sum c_i x^i over F_p is sum c_i p^i. A full coordinate
/// vector packs into a single integer as sum coord_j q^j.
class FieldCtx {
public:
    FieldCtx(std::int64_t p, int e, int n);

    FieldCtx(const FieldCtx&) = delete;
    FieldCtx& operator=(const FieldCtx&) = delete;

    std::int64_t p() const noexcept { return p_; }
    int e() const noexcept { return e_; }
    int n() const noexcept { return n_; }
    std::uint64_t q() const noexcept { return q_; }
    /// q^n - 1, the order of the multiplicative group.
    std::uint64_t group_order() const noexcept { return order_; }
    /// q^m for 0 <= m <= n.
    std::uint64_t q_pow(int m) const;

    /// Modulus of F_q over F_p, low degree first, monic of degree e.
    /// Empty when e == 1.
    const std::vector<std::uint32_t>& modulus_base() const noexcept { return mod_base_; }
    /// Modulus of F_{q^n} over F_q, low degree first, monic of degree n.
    const std::vector<std::uint32_t>& modulus_top() const noexcept { return mod_top_; }

    FieldElement zero() const noexcept { return FieldElement(); }
    FieldElement one() const noexcept { return FieldElement(0); }
    FieldElement alpha() const noexcept { return FieldElement(order_ > 1 ? 1 : 0); }
    /// alpha^j for any integer j (reduced mod q^n - 1).
    FieldElement alpha_pow(std::int64_t j) const noexcept { return FieldElement(mod_order(j)); }

    FieldElement add(FieldElement a, FieldElement b) const;
    FieldElement sub(FieldElement a, FieldElement b) const;
    FieldElement neg(FieldElement a) const;
    FieldElement mul(FieldElement a, FieldElement b) const;
    /// Throws InvalidArgument for zero.
    FieldElement inv(FieldElement a) const;
    /// 0^0 = 1; negative powers of zero throw InvalidArgument.
    FieldElement pow(FieldElement a, std::int64_t k) const;

    /// Order of a in the multiplicative group. Throws for zero.
    std::uint64_t multiplicative_order(FieldElement a) const;

    /// alpha^((q^n-1)/(q^m-1)), a primitive element of the subfield F_{q^m}.
    /// Requires m to divide n.
    FieldElement subfield_generator(int m) const;

    /// Coordinates over F_q, length n.
    std::vector<std::uint32_t> to_coords(FieldElement a) const;
    FieldElement from_coords(const std::vector<std::uint32_t>& coords) const;

    /// Packed coordinate vector: sum coord_j q^j, in [0, q^n).
    std::uint64_t packed(FieldElement a) const;
    FieldElement from_packed(std::uint64_t v) const;

    // F_q scalar arithmetic on encodings in [0, q).
    std::uint32_t fq_add(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t fq_sub(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t fq_neg(std::uint32_t a) const;
    std::uint32_t fq_mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t fq_inv(std::uint32_t a) const;

    // Packed vector arithmetic over F_q. Works for any number of digits up
    // to 2n (intermediate rows in linear algebra are that wide).
    std::uint64_t vec_add(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t vec_scale(std::uint64_t a, std::uint32_t c) const;
    std::uint32_t vec_digit(std::uint64_t a, int j) const;
    std::uint64_t vec_set_digit(std::uint64_t a, int j, std::uint32_t c) const;

    /// True when addition of packed vectors is plain xor (p == 2).
    bool xor_add() const noexcept { return p_ == 2; }

    std::int64_t mod_order(std::int64_t j) const noexcept {
        if (order_ == 1) return 0;
        std::int64_t m = j % static_cast<std::int64_t>(order_);
        return m < 0 ? m + static_cast<std::int64_t>(order_) : m;
    }

private:
    void build_base_field();
    void build_top_field();
    std::uint64_t mul_by_alpha(std::uint64_t v) const;
    std::uint32_t fq_mul_slow(std::uint32_t a, std::uint32_t b) const;

    std::int64_t p_ = 0;
    int e_ = 0;
    int n_ = 0;
    std::uint64_t q_ = 0;
    std::uint64_t order_ = 0;
    std::vector<std::uint32_t> mod_base_; // over F_p, degree e, monic
    std::vector<std::uint32_t> mod_top_;  // over F_q, degree n, monic
    std::vector<std::uint64_t> qpow_;     // q^j, j <= 2n
    std::vector<std::uint32_t> antilog_;  // exponent -> packed coords
    std::vector<std::int32_t> log_;       // packed coords -> exponent, -1 unused
    std::vector<std::int32_t> fq_log_;    // e > 1 only
    std::vector<std::uint32_t> fq_antilog_;
};

/// Distinct prime factors, ascending.
std::vector<std::uint64_t> prime_factors(std::uint64_t v);
/// All divisors, ascending.
std::vector<std::uint64_t> divisors(std::uint64_t v);

} // namespace orbitflags
