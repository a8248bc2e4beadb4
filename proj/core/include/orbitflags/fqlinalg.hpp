#pragma once

#include <cstdint>
#include <vector>

#include "orbitflags/gfield.hpp"

namespace orbitflags {

/// A matrix over F_q whose rows are packed coordinate vectors (digit j is
/// the coefficient of basis vector j, packed as sum digit_j q^j). Used as a
/// row space representation; width may exceed n for intermediate results,
/// up to 2n.
class FqMatrix {
public:
    FqMatrix(const FieldCtx& ctx, int width) : ctx_(&ctx), width_(width) {}
    FqMatrix(const FieldCtx& ctx, int width, std::vector<std::uint64_t> rows)
        : ctx_(&ctx), width_(width), rows_(std::move(rows)) {}

    const FieldCtx& ctx() const noexcept { return *ctx_; }
    int width() const noexcept { return width_; }
    int row_count() const noexcept { return static_cast<int>(rows_.size()); }
    const std::vector<std::uint64_t>& rows() const noexcept { return rows_; }
    std::uint64_t row(int i) const { return rows_[i]; }
    std::uint32_t at(int i, int j) const { return ctx_->vec_digit(rows_[i], j); }
    void append_row(std::uint64_t r) { rows_.push_back(r); }

    friend bool operator==(const FqMatrix& a, const FqMatrix& b) {
        return a.width_ == b.width_ && a.rows_ == b.rows_;
    }

private:
    const FieldCtx* ctx_;
    int width_;
    std::vector<std::uint64_t> rows_;
};

/// Reduced row echelon form with zero rows dropped: the canonical
/// representative of the row space. Pivots are the lowest-index nonzero
/// digit of each row and increase from top to bottom.
FqMatrix rref(const FqMatrix& a);

/// Number of independent rows.
int rank(const FqMatrix& a);

/// Rank of the rows of a and b stacked, without materializing the stack.
int rank_of_union(const FqMatrix& a, const FqMatrix& b);

/// Canonical basis of rowspace(a) + rowspace(b).
FqMatrix sum_spaces(const FqMatrix& a, const FqMatrix& b);

/// Canonical basis of rowspace(a) intersect rowspace(b), by the Zassenhaus
/// double-block elimination.
FqMatrix intersect_spaces(const FqMatrix& a, const FqMatrix& b);

/// Membership of a packed vector in the row space. Requires a in rref.
bool space_contains(const FqMatrix& a, std::uint64_t v);

/// All q^rank packed vectors of the row space, in no particular order.
/// Guarded to spaces of at most 2^20 elements.
std::vector<std::uint64_t> enumerate_space(const FqMatrix& a);

} // namespace orbitflags
