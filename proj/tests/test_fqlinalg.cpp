#include <doctest.h>

#include <array>
#include <cstdint>
#include <set>
#include <vector>

#include "orbitflags/errors.hpp"
#include "orbitflags/fqlinalg.hpp"

#include "helpers.hpp"

using namespace orbitflags;
using testutil::Rng;

namespace {

std::vector<std::uint64_t> random_rows(const FieldCtx& ctx, Rng& rng, int count) {
    std::vector<std::uint64_t> rows;
    for (int i = 0; i < count; ++i)
        rows.push_back(ctx.packed(testutil::random_element(ctx, rng)));
    return rows;
}

} // namespace

TEST_SUITE("fqlinalg") {

TEST_CASE("rref is canonical under generating set changes") {
    constexpr std::array<std::array<int, 3>, 4> fields{{{2, 1, 8}, {3, 1, 4}, {2, 2, 3}, {5, 1, 3}}};
    for (auto [p, e, n] : fields) {
        FieldCtx ctx(p, e, n);
        Rng rng(0xfeedULL * p + n);
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<std::uint64_t> rows = random_rows(ctx, rng, 3);
            FqMatrix canon = rref(FqMatrix(ctx, n, rows));

            // shuffled generators
            std::vector<std::uint64_t> shuffled = {rows[2], rows[0], rows[1]};
            CHECK(rref(FqMatrix(ctx, n, shuffled)) == canon);

            // generators rescaled by nonzero field elements stay inside the
            // space only when scaled by base-field scalars; use row sums
            // instead, which always preserve the span
            std::vector<std::uint64_t> mixed = {
                ctx.vec_add(rows[0], rows[1]), rows[1],
                ctx.vec_add(rows[2], ctx.vec_add(rows[0], rows[1]))};
            CHECK(rref(FqMatrix(ctx, n, mixed)) == canon);

            // rref of an rref is itself
            CHECK(rref(canon) == canon);

            // pivot structure: strictly increasing lowest nonzero digit,
            // pivot columns are zero elsewhere and pivots are 1
            int prev_pivot = -1;
            for (int i = 0; i < canon.row_count(); ++i) {
                int pivot = 0;
                while (canon.at(i, pivot) == 0)
                    ++pivot;
                CHECK(pivot > prev_pivot);
                CHECK(canon.at(i, pivot) == 1);
                for (int k = 0; k < canon.row_count(); ++k)
                    if (k != i)
                        CHECK(canon.at(k, pivot) == 0);
                prev_pivot = pivot;
            }
        }
    }
}

TEST_CASE("rank equals log of enumerated span size") {
    constexpr std::array<std::array<int, 3>, 3> fields{{{2, 1, 10}, {3, 1, 4}, {2, 2, 3}}};
    for (auto [p, e, n] : fields) {
        FieldCtx ctx(p, e, n);
        Rng rng(0xabc0 + n);
        for (int trial = 0; trial < 30; ++trial) {
            std::vector<std::uint64_t> rows = random_rows(ctx, rng, 1 + (int)rng.below(3));
            FqMatrix m(ctx, n, rows);
            std::set<std::uint64_t> oracle = testutil::span_oracle(ctx, rows);
            std::uint64_t expect = 1;
            for (int i = 0; i < rank(m); ++i)
                expect *= ctx.q();
            CHECK(oracle.size() == expect);

            std::vector<std::uint64_t> got = enumerate_space(rref(m));
            CHECK(std::set<std::uint64_t>(got.begin(), got.end()) == oracle);
        }
    }
}

TEST_CASE("membership agrees with enumeration") {
    FieldCtx ctx(3, 1, 4);
    Rng rng(77);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<std::uint64_t> rows = random_rows(ctx, rng, 2);
        FqMatrix m = rref(FqMatrix(ctx, 4, rows));
        std::set<std::uint64_t> members = testutil::span_oracle(ctx, rows);
        for (int probe = 0; probe < 60; ++probe) {
            std::uint64_t v = ctx.packed(testutil::random_element(ctx, rng));
            CHECK(space_contains(m, v) == (members.count(v) > 0));
        }
        for (std::uint64_t v : members)
            CHECK(space_contains(m, v));
    }
}

TEST_CASE("sum and intersection satisfy the dimension formula and enumeration oracle") {
    constexpr std::array<std::array<int, 3>, 3> fields{{{2, 1, 9}, {3, 1, 4}, {2, 2, 3}}};
    for (auto [p, e, n] : fields) {
        FieldCtx ctx(p, e, n);
        Rng rng(0x5eedULL + p * 100 + n);
        for (int trial = 0; trial < 40; ++trial) {
            std::vector<std::uint64_t> ra = random_rows(ctx, rng, 1 + (int)rng.below(3));
            std::vector<std::uint64_t> rb = random_rows(ctx, rng, 1 + (int)rng.below(3));
            FqMatrix a = rref(FqMatrix(ctx, n, ra)), b = rref(FqMatrix(ctx, n, rb));

            FqMatrix s = sum_spaces(a, b);
            FqMatrix i = intersect_spaces(a, b);
            CHECK(rank(s) == rank(a) + rank(b) - rank(i));
            CHECK(rank(s) == rank_of_union(a, b));

            std::set<std::uint64_t> ma = testutil::span_oracle(ctx, ra);
            std::set<std::uint64_t> mb = testutil::span_oracle(ctx, rb);
            std::set<std::uint64_t> expect_inter;
            for (std::uint64_t v : ma)
                if (mb.count(v))
                    expect_inter.insert(v);
            std::vector<std::uint64_t> got = enumerate_space(i);
            CHECK(std::set<std::uint64_t>(got.begin(), got.end()) == expect_inter);

            // every sum-space member is a + b
            for (std::uint64_t v : enumerate_space(s)) {
                bool found = false;
                for (std::uint64_t x : ma) {
                    std::uint64_t need = ctx.packed(
                        ctx.sub(ctx.from_packed(v), ctx.from_packed(x)));
                    if (mb.count(need)) {
                        found = true;
                        break;
                    }
                }
                CHECK(found);
            }
        }
    }
}

TEST_CASE("intersection with self and with the zero space") {
    FieldCtx ctx(2, 1, 12);
    Rng rng(9);
    for (int trial = 0; trial < 20; ++trial) {
        FqMatrix a = rref(FqMatrix(ctx, 12, random_rows(ctx, rng, 3)));
        CHECK(intersect_spaces(a, a) == a);
        CHECK(sum_spaces(a, a) == a);
        FqMatrix zero(ctx, 12);
        CHECK(rank(intersect_spaces(a, zero)) == 0);
        CHECK(sum_spaces(a, zero) == a);
    }
}

TEST_CASE("enumerate_space refuses huge spaces") {
    FieldCtx ctx(2, 1, 24);
    std::vector<std::uint64_t> rows;
    for (int j = 0; j < 24; ++j)
        rows.push_back(1ull << j);
    FqMatrix full = rref(FqMatrix(ctx, 24, rows));
    CHECK(rank(full) == 24);
    CHECK_THROWS_AS((void)enumerate_space(full), ResourceCap);
}

} // TEST_SUITE
