#include "orbitflags/fqlinalg.hpp"

#include <array>
#include <bit>

namespace orbitflags {

namespace {

void check_compatible(const FqMatrix& a, const FqMatrix& b) {
    if (&a.ctx() != &b.ctx()) throw InvalidArgument("matrices over different fields");
    if (a.width() != b.width()) throw InvalidArgument("matrices of different widths");
}

std::vector<std::uint64_t> rref_rows(const FieldCtx& F, std::vector<std::uint64_t> rows, int width) {
    std::size_t r = 0;
    if (F.q() == 2) {
        for (int col = 0; col < width && r < rows.size(); ++col) {
            const std::uint64_t bit = std::uint64_t(1) << col;
            std::size_t piv = r;
            while (piv < rows.size() && !(rows[piv] & bit)) ++piv;
            if (piv == rows.size()) continue;
            std::swap(rows[r], rows[piv]);
            for (std::size_t i = 0; i < rows.size(); ++i)
                if (i != r && (rows[i] & bit)) rows[i] ^= rows[r];
            ++r;
        }
    } else {
        for (int col = 0; col < width && r < rows.size(); ++col) {
            std::size_t piv = r;
            while (piv < rows.size() && F.vec_digit(rows[piv], col) == 0) ++piv;
            if (piv == rows.size()) continue;
            std::swap(rows[r], rows[piv]);
            rows[r] = F.vec_scale(rows[r], F.fq_inv(F.vec_digit(rows[r], col)));
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (i == r) continue;
                std::uint32_t d = F.vec_digit(rows[i], col);
                if (d != 0) rows[i] = F.vec_add(rows[i], F.vec_scale(rows[r], F.fq_neg(d)));
            }
            ++r;
        }
    }
    rows.resize(r);
    return rows;
}

// incremental rank accumulator; pivot per column
struct RankAcc {
    const FieldCtx& F;
    int width;
    std::array<std::uint64_t, 64> piv{};
    int rank = 0;

    explicit RankAcc(const FieldCtx& f, int w) : F(f), width(w) {}

    void feed(std::uint64_t v) {
        if (F.q() == 2) {
            while (v != 0) {
                int c = std::countr_zero(v);
                if (piv[c] == 0) {
                    piv[c] = v;
                    ++rank;
                    return;
                }
                v ^= piv[c];
            }
            return;
        }
        for (int c = 0; c < width && v != 0; ++c) {
            std::uint32_t d = F.vec_digit(v, c);
            if (d == 0) continue;
            if (piv[c] == 0) {
                piv[c] = F.vec_scale(v, F.fq_inv(d));
                ++rank;
                return;
            }
            v = F.vec_add(v, F.vec_scale(piv[c], F.fq_neg(d)));
        }
    }
};

} // namespace

FqMatrix rref(const FqMatrix& a) {
    return FqMatrix(a.ctx(), a.width(), rref_rows(a.ctx(), a.rows(), a.width()));
}

int rank(const FqMatrix& a) {
    RankAcc acc(a.ctx(), a.width());
    for (std::uint64_t v : a.rows()) acc.feed(v);
    return acc.rank;
}

int rank_of_union(const FqMatrix& a, const FqMatrix& b) {
    check_compatible(a, b);
    RankAcc acc(a.ctx(), a.width());
    for (std::uint64_t v : a.rows()) acc.feed(v);
    for (std::uint64_t v : b.rows()) acc.feed(v);
    return acc.rank;
}

FqMatrix sum_spaces(const FqMatrix& a, const FqMatrix& b) {
    check_compatible(a, b);
    std::vector<std::uint64_t> rows = a.rows();
    rows.insert(rows.end(), b.rows().begin(), b.rows().end());
    return FqMatrix(a.ctx(), a.width(), rref_rows(a.ctx(), std::move(rows), a.width()));
}

FqMatrix intersect_spaces(const FqMatrix& a, const FqMatrix& b) {
    check_compatible(a, b);
    const FieldCtx& F = a.ctx();
    const int w = a.width();
    if (2 * w > 2 * F.n()) throw InvalidArgument("width too large for intersection");
    std::uint64_t qw = 1;
    for (int j = 0; j < w; ++j) qw *= F.q();

    // [A | A] stacked on [B | 0]; rows whose left block vanishes carry the
    // intersection in the right block
    std::vector<std::uint64_t> rows;
    rows.reserve(a.row_count() + b.row_count());
    for (std::uint64_t v : a.rows()) rows.push_back(v + v * qw);
    for (std::uint64_t v : b.rows()) rows.push_back(v);
    rows = rref_rows(F, std::move(rows), 2 * w);

    std::vector<std::uint64_t> inter;
    for (std::uint64_t v : rows)
        if (v % qw == 0 && v != 0) inter.push_back(v / qw);
    return FqMatrix(F, w, rref_rows(F, std::move(inter), w));
}

bool space_contains(const FqMatrix& a, std::uint64_t v) {
    const FieldCtx& F = a.ctx();
    if (F.q() == 2) {
        for (std::uint64_t row : a.rows()) {
            if (v == 0) return true;
            if (v & (row & (~row + 1))) v ^= row; // pivot = lowest set bit of row
        }
        return v == 0;
    }
    for (std::uint64_t row : a.rows()) {
        if (v == 0) return true;
        int c = 0;
        while (F.vec_digit(row, c) == 0) ++c;
        std::uint32_t d = F.vec_digit(v, c);
        if (d != 0) v = F.vec_add(v, F.vec_scale(row, F.fq_neg(d)));
    }
    return v == 0;
}

std::vector<std::uint64_t> enumerate_space(const FqMatrix& a) {
    const FieldCtx& F = a.ctx();
    double size = 1;
    for (int i = 0; i < a.row_count(); ++i) size *= static_cast<double>(F.q());
    if (size > double(1 << 20)) throw ResourceCap("row space too large to enumerate");

    std::vector<std::uint64_t> out{0};
    for (std::uint64_t row : a.rows()) {
        std::size_t base = out.size();
        out.reserve(base * F.q());
        for (std::uint32_t c = 1; c < F.q(); ++c) {
            std::uint64_t scaled = F.vec_scale(row, c);
            for (std::size_t i = 0; i < base; ++i) out.push_back(F.vec_add(out[i], scaled));
        }
    }
    return out;
}

} // namespace orbitflags
