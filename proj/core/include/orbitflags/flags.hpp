#pragma once

#include <cstddef>
#include <vector>

#include "orbitflags/subspaces.hpp"

namespace orbitflags {

/// A full-support chain {0} < F_1 < ... < F_r < F_{q^n} of strictly nested
/// proper nontrivial subspaces. The type vector (dim F_1, ..., dim F_r) is
/// strictly increasing with entries in [1, n-1].
class Flag {
public:
    Flag(const FieldCtx& ctx, std::vector<Subspace> subspaces);

    const FieldCtx& ctx() const noexcept { return *ctx_; }
    std::size_t length() const noexcept { return subs_.size(); }
    const Subspace& at(std::size_t i) const { return subs_.at(i); }
    const std::vector<Subspace>& subspaces() const noexcept { return subs_; }
    std::vector<int> type() const;

    /// Componentwise scaling, F * b. Requires b != 0.
    Flag scaled(FieldElement b) const;

    /// Flag on the subspaces at the given 0-based positions, which must be
    /// strictly increasing and nonempty.
    Flag subflag(const std::vector<std::size_t>& positions) const;

    std::size_t hash() const noexcept;

    friend bool operator==(const Flag& a, const Flag& b) {
        return a.ctx_ == b.ctx_ && a.subs_ == b.subs_;
    }

private:
    const FieldCtx* ctx_;
    std::vector<Subspace> subs_;
};

/// Sum of per-position subspace distances. Requires equal type vectors.
int flag_distance(const Flag& a, const Flag& b);

/// Largest possible flag distance for the given type on F_{q^n}:
/// 2 * sum_i min(t_i, n - t_i).
int max_flag_distance(int n, const std::vector<int>& type);

enum class FlagKind {
    galois,             // every subspace is a subfield
    generalized_galois, // some but not all subspaces are subfields
    plain,              // no subspace is a subfield
};

struct FlagClassification {
    FlagKind kind = FlagKind::plain;
    /// 0-based positions whose subspace equals the subfield of its dimension.
    std::vector<std::size_t> field_positions;
    /// Dimensions at the field positions: the type of the largest
    /// subfield-only subflag. Empty for plain flags.
    std::vector<int> underlying_type;
};

/// A subspace counts as a subfield when its dimension divides n and it
/// equals the fixed field of x -> x^(q^dim), i.e. F_{q^dim}.
FlagClassification classify_flag(const Flag& f);

/// Largest m such that every subspace of the flag is F_{q^m}-linear: the
/// gcd of the component best friends.
int best_friend_flag(const Flag& f);

const char* to_string(FlagKind kind);

} // namespace orbitflags
