#include <doctest.h>

#include <array>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "orbitflags/errors.hpp"
#include "orbitflags/subspaces.hpp"

#include "helpers.hpp"

using namespace orbitflags;
using testutil::Rng;

namespace {

Subspace random_subspace(const FieldCtx& ctx, Rng& rng, int gens) {
    std::vector<FieldElement> v;
    for (int i = 0; i < gens; ++i)
        v.push_back(testutil::random_element(ctx, rng));
    return Subspace::from_elements(ctx, v);
}

/// Direct check that U is F_{q^m}-linear: closed under scaling by the
/// subfield generator.
bool linear_over(const Subspace& u, int m) {
    const FieldCtx& ctx = u.ctx();
    FieldElement gamma = ctx.subfield_generator(m);
    for (std::uint64_t v : u.enumerate_packed()) {
        if (v == 0)
            continue;
        if (!u.contains(ctx.mul(ctx.from_packed(v), gamma)))
            return false;
    }
    return true;
}

int best_friend_oracle(const Subspace& u) {
    int g = std::gcd(u.dim(), u.ctx().n());
    for (int m = g; m >= 1; --m)
        if (g % m == 0 && linear_over(u, m))
            return m;
    return 1;
}

} // namespace

TEST_SUITE("subspaces") {

TEST_CASE("subfield subspace equals the Frobenius fixed field") {
    constexpr std::array<std::array<int, 3>, 3> fields{{{2, 1, 12}, {3, 1, 4}, {2, 2, 3}}};
    for (auto [p, e, n] : fields) {
        FieldCtx ctx(p, e, n);
        for (std::uint64_t m : divisors(static_cast<std::uint64_t>(n))) {
            Subspace sub = Subspace::subfield(ctx, static_cast<int>(m));
            CHECK(sub.dim() == static_cast<int>(m));
            std::set<std::uint64_t> got = testutil::member_set(sub);
            std::set<std::uint64_t> expect{0};
            if (ctx.group_order() > 0) {
                FieldElement gamma = ctx.subfield_generator(static_cast<int>(m));
                FieldElement x = ctx.one();
                do {
                    expect.insert(ctx.packed(x));
                    x = ctx.mul(x, gamma);
                } while (!(x == ctx.one()));
            }
            CHECK(got == expect);
        }
    }
}

TEST_CASE("canonical form ignores the generating set") {
    FieldCtx ctx(2, 1, 10);
    Rng rng(31337);
    for (int trial = 0; trial < 50; ++trial) {
        Subspace u = random_subspace(ctx, rng, 3);
        std::vector<std::uint64_t> members = u.enumerate_packed();
        // re-span from a random sample of member vectors that happens to
        // generate the same space
        std::vector<std::uint64_t> regen;
        Subspace v = Subspace::zero(ctx);
        int guard = 0;
        while (v.dim() < u.dim() && guard++ < 200) {
            regen.push_back(members[rng.below(members.size())]);
            v = Subspace::from_rows(ctx, regen);
        }
        REQUIRE(v.dim() == u.dim());
        CHECK(v == u);
        CHECK(v.hash() == u.hash());
    }
}

TEST_CASE("from_rows range-checks packed values") {
    FieldCtx ctx(2, 1, 8);
    CHECK_THROWS_AS((void)Subspace::from_rows(ctx, {1ull << 8}), InvalidArgument);
    CHECK_NOTHROW((void)Subspace::from_rows(ctx, {(1ull << 8) - 1}));
}

TEST_CASE("scaling is a bijection on members and preserves distances") {
    constexpr std::array<std::array<int, 3>, 2> fields{{{2, 1, 10}, {3, 1, 4}}};
    for (auto [p, e, n] : fields) {
        FieldCtx ctx(p, e, n);
        Rng rng(0xd00 + n);
        for (int trial = 0; trial < 30; ++trial) {
            Subspace u = random_subspace(ctx, rng, 2);
            Subspace v = random_subspace(ctx, rng, 2);
            FieldElement b = testutil::random_nonzero(ctx, rng);

            std::set<std::uint64_t> expect;
            for (std::uint64_t x : u.enumerate_packed())
                expect.insert(ctx.packed(ctx.mul(ctx.from_packed(x), b)));
            CHECK(testutil::member_set(u.scaled(b)) == expect);

            CHECK(subspace_distance(u.scaled(b), v.scaled(b)) == subspace_distance(u, v));
            CHECK(u.scaled(b).dim() == u.dim());
            CHECK(u.scaled(ctx.one()) == u);
        }
    }
}

TEST_CASE("distance matches the enumeration oracle and the metric axioms") {
    FieldCtx ctx(2, 1, 9);
    Rng rng(4242);
    for (int trial = 0; trial < 60; ++trial) {
        Subspace u = random_subspace(ctx, rng, 2);
        Subspace v = random_subspace(ctx, rng, 2);
        Subspace w = random_subspace(ctx, rng, 2);
        int duv = subspace_distance(u, v);
        CHECK(duv == testutil::distance_by_enumeration(u, v));
        CHECK(duv == subspace_distance(v, u));
        CHECK(subspace_distance(u, u) == 0);
        CHECK((duv == 0) == (u == v));
        CHECK(duv <= subspace_distance(u, w) + subspace_distance(w, v));
        // graph-distance formula
        CHECK(duv == sum(u, v).dim() - intersect(u, v).dim());
    }
}

TEST_CASE("orbit-stabilizer identity across subgroups") {
    FieldCtx ctx(2, 1, 12);
    Rng rng(99);
    for (int trial = 0; trial < 12; ++trial) {
        Subspace u = random_subspace(ctx, rng, 1 + (int)rng.below(2));
        if (u.dim() == 0)
            continue;
        for (std::uint64_t d : {1ull, 3ull, 5ull, 63ull, 65ull, 4095ull}) {
            FieldElement b = ctx.alpha_pow(static_cast<std::int64_t>(ctx.group_order() / d));
            SubspaceOrbit orbit = orbit_subspace(u, b);
            CHECK(orbit.size() * orbit.stab_order == d);
            CHECK(orbit.stab_order == stabilizer_order(u, b));
            // elements really are the successive scalings, all distinct
            std::set<std::size_t> hashes;
            for (std::size_t j = 0; j < orbit.elements.size(); ++j) {
                CHECK(orbit.elements[j] ==
                      u.scaled(ctx.pow(b, static_cast<std::int64_t>(j))));
                hashes.insert(orbit.elements[j].hash());
            }
            CHECK(hashes.size() == orbit.size());
        }
    }
}

TEST_CASE("best friend agrees with the direct linearity scan") {
    constexpr std::array<std::array<int, 3>, 2> fields{{{2, 1, 12}, {2, 1, 8}}};
    for (auto [p, e, n] : fields) {
        FieldCtx ctx(p, e, n);
        Rng rng(0xbf + n);
        for (std::uint64_t m : divisors(static_cast<std::uint64_t>(n))) {
            if (static_cast<int>(m) == n)
                continue;
            CHECK(best_friend(Subspace::subfield(ctx, static_cast<int>(m))) ==
                  static_cast<int>(m));
        }
        for (int trial = 0; trial < 25; ++trial) {
            Subspace u = random_subspace(ctx, rng, 1 + (int)rng.below(3));
            if (u.dim() == 0)
                continue;
            CHECK(best_friend(u) == best_friend_oracle(u));
        }
    }
}

TEST_CASE("best friend is invariant along orbits") {
    FieldCtx ctx(2, 1, 12);
    Rng rng(555);
    for (int trial = 0; trial < 10; ++trial) {
        Subspace u = random_subspace(ctx, rng, 2);
        if (u.dim() == 0)
            continue;
        int bf = best_friend(u);
        FieldElement b = testutil::random_nonzero(ctx, rng);
        Subspace cur = u;
        for (int j = 0; j < 8; ++j) {
            cur = cur.scaled(b);
            CHECK(best_friend(cur) == bf);
        }
    }
}

TEST_CASE("subfield orbits are spreads") {
    // the m-spread partitions the nonzero vectors; size (q^n-1)/(q^m-1)
    FieldCtx small(2, 1, 4);
    SubspaceOrbit spread4 = orbit_subspace(Subspace::subfield(small, 2), small.alpha());
    CHECK(spread4.size() == 5);
    std::set<std::uint64_t> covered;
    for (const auto& s : spread4.elements)
        for (std::uint64_t v : s.enumerate_packed())
            if (v != 0) {
                CHECK(covered.insert(v).second); // pairwise trivial intersection
            }
    CHECK(covered.size() == 15);

    FieldCtx big(2, 1, 12);
    CHECK(orbit_subspace(Subspace::subfield(big, 2), big.alpha()).size() == 1365);
    CHECK(orbit_min_distance(Subspace::subfield(big, 2), big.alpha()) == 4);
}

TEST_CASE("minimal polynomial degrees over subfields") {
    FieldCtx ctx8(2, 1, 8);
    CHECK(minpoly_degree(ctx8, 1, 2) == 4);  // primitive element, degree [F_256:F_4]
    CHECK(minpoly_degree(ctx8, 1, 1) == 8);
    CHECK(minpoly_degree(ctx8, 85, 2) == 1); // alpha^85 generates F_4
    CHECK(minpoly_degree(ctx8, 17, 2) == 2); // order 15 element lives in F_16

    FieldCtx ctx12(2, 1, 12);
    CHECK(minpoly_degree(ctx12, 1, 2) == 6);
    CHECK(minpoly_degree(ctx12, 65, 2) == 3); // alpha^65 has order 63, inside F_2^6
    CHECK(minpoly_degree(ctx12, 5, 2) == 6);
    CHECK(minpoly_degree(ctx12, 1365, 2) == 1);

    // oracle: smallest d with l * q^(m d) = l mod group order
    for (std::uint64_t l : {1ull, 5ull, 9ull, 63ull, 65ull, 91ull, 117ull}) {
        for (int m : {1, 2, 3, 4, 6}) {
            int expect = 1;
            std::uint64_t N = ctx12.group_order();
            __uint128_t fr = l;
            while (true) {
                fr = fr * ctx12.q_pow(m) % N;
                if (fr == l % N)
                    break;
                ++expect;
            }
            CHECK(minpoly_degree(ctx12, l, m) == expect);
        }
    }
}

TEST_CASE("regular form subspaces: shape, nesting, best friend, field cases") {
    FieldCtx ctx(2, 1, 12);
    const int m = 2;
    const std::uint64_t l = 65;
    int L = minpoly_degree(ctx, l, m);
    REQUIRE(L == 3);
    Subspace prev = Subspace::zero(ctx);
    for (int t = 1; t <= L; ++t) {
        Subspace u = regular_form_subspace(ctx, m, l, t);
        CHECK(u.dim() == m * t);
        CHECK(u.contains_subspace(prev));
        CHECK(best_friend(u) == (t == L ? m * L : m));
        prev = u;
    }
    // the L-th space is the subfield F_{q^(mL)}
    CHECK(regular_form_subspace(ctx, m, l, L) == Subspace::subfield(ctx, m * L));
    CHECK(regular_form_subspace(ctx, m, l, 1) == Subspace::subfield(ctx, m));
    CHECK_THROWS_AS((void)regular_form_subspace(ctx, m, l, L + 1), Infeasible);

    // primitive element over F_4 in F_2^8: L = 4 and U_4 would be everything,
    // but t = L is still a legal subspace only when mL < n
    FieldCtx ctx8(2, 1, 8);
    CHECK(regular_form_subspace(ctx8, 2, 1, 4) == Subspace::full(ctx8));
}

TEST_CASE("regular form rejects out-of-range scalars") {
    FieldCtx ctx(2, 1, 8);
    CHECK_THROWS_AS((void)regular_form_subspace(ctx, 2, 0, 1), InvalidArgument);
    CHECK_THROWS_AS((void)regular_form_subspace(ctx, 2, 85, 1), InvalidArgument);
    CHECK_NOTHROW((void)regular_form_subspace(ctx, 2, 84, 1));
    CHECK_THROWS_AS((void)regular_form_subspace(ctx, 3, 1, 1), InvalidArgument); // 3 does not divide 8
}

TEST_CASE("sum and intersect wrappers agree with membership") {
    FieldCtx ctx(3, 1, 4);
    Rng rng(321);
    for (int trial = 0; trial < 25; ++trial) {
        Subspace u = random_subspace(ctx, rng, 2);
        Subspace v = random_subspace(ctx, rng, 2);
        Subspace s = sum(u, v), i = intersect(u, v);
        CHECK(s.contains_subspace(u));
        CHECK(s.contains_subspace(v));
        CHECK(u.contains_subspace(i));
        CHECK(v.contains_subspace(i));
        CHECK(s.dim() + i.dim() == u.dim() + v.dim());
    }
}

} // TEST_SUITE
