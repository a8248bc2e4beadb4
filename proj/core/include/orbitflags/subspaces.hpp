#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "orbitflags/fqlinalg.hpp"
#include "orbitflags/gfield.hpp"

namespace orbitflags {

/// An F_q-subspace of F_{q^n}, stored as the canonical reduced row echelon
/// basis of packed coordinate vectors. Two subspaces are equal exactly when
/// their canonical bases are equal.
class Subspace {
public:
    static Subspace zero(const FieldCtx& ctx);
    static Subspace full(const FieldCtx& ctx);
    /// Span of arbitrary packed vectors.
    static Subspace from_rows(const FieldCtx& ctx, const std::vector<std::uint64_t>& rows);
    static Subspace from_elements(const FieldCtx& ctx, const std::vector<FieldElement>& gens);
    /// The subfield F_{q^m} as a subspace. Requires m | n.
    static Subspace subfield(const FieldCtx& ctx, int m);

    const FieldCtx& ctx() const noexcept { return *ctx_; }
    int dim() const noexcept { return static_cast<int>(rows_.size()); }
    /// Canonical rref basis rows, pivot columns ascending.
    const std::vector<std::uint64_t>& rows() const noexcept { return rows_; }
    FqMatrix matrix() const { return FqMatrix(*ctx_, ctx_->n(), rows_); }

    bool contains_packed(std::uint64_t v) const;
    bool contains(FieldElement a) const { return contains_packed(ctx_->packed(a)); }
    bool contains_subspace(const Subspace& other) const;

    /// The subspace U * b. Requires b != 0.
    Subspace scaled(FieldElement b) const;

    /// All q^dim member vectors, packed. Guarded to 2^20 elements.
    std::vector<std::uint64_t> enumerate_packed() const;

    std::size_t hash() const noexcept;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ctx_ == b.ctx_ && a.rows_ == b.rows_;
    }

private:
    Subspace(const FieldCtx& ctx, std::vector<std::uint64_t> canonical_rows)
        : ctx_(&ctx), rows_(std::move(canonical_rows)) {}

    const FieldCtx* ctx_;
    std::vector<std::uint64_t> rows_;
};

Subspace sum(const Subspace& u, const Subspace& v);
Subspace intersect(const Subspace& u, const Subspace& v);

/// dim(U + V) - dim(U intersect V), the graph distance in the subspace
/// lattice. The two subspaces may have different dimensions.
int subspace_distance(const Subspace& u, const Subspace& v);

/// Order of the subgroup of <b> fixing U, i.e. |b| / orbit length.
/// Requires b != 0 and dim(U) >= 1.
std::uint64_t stabilizer_order(const Subspace& u, FieldElement b);

/// The largest m dividing gcd(dim U, n) such that U is F_{q^m}-linear.
/// Requires dim(U) >= 1. Always at least 1.
int best_friend(const Subspace& u);

/// Orbit of a subspace under multiplication by b, elements in the order
/// U, U*b, U*b^2, ...
struct SubspaceOrbit {
    FieldElement beta;
    std::vector<Subspace> elements;
    std::uint64_t stab_order = 1;

    std::uint64_t size() const noexcept { return elements.size(); }
};

SubspaceOrbit orbit_subspace(const Subspace& u, FieldElement b);

/// Min distance between the base point and its nontrivial translates,
/// which by transitivity is the min distance of the whole orbit.
/// Zero for a singleton orbit.
int orbit_min_distance(const Subspace& u, FieldElement b);

/// Degree of the minimal polynomial of alpha^l over F_{q^m}: the smallest
/// d >= 1 with (alpha^l)^(q^(m*d)) = alpha^l. Requires m | n.
int minpoly_degree(const FieldCtx& ctx, std::uint64_t l, int m);

/// The direct sum of F_{q^m} * alpha^(l*j) for j = 0..t-1, a subspace of
/// dimension m*t. Requires m | n, 1 <= l < (q^n-1)/(q^m-1) and t between 1
/// and the minimal polynomial degree of alpha^l over F_{q^m}.
Subspace regular_form_subspace(const FieldCtx& ctx, int m, std::uint64_t l, int t);

} // namespace orbitflags
