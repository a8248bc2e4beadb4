#pragma once

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <set>
#include <vector>

#include "orbitflags/flags.hpp"

namespace testutil {

/// xorshift64*; good enough to drive property tests, independent of the
/// library's own stream implementation.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x853c49e6748fea9bULL) {}

    std::uint64_t next() {
        state_ ^= state_ >> 12;
        state_ ^= state_ << 25;
        state_ ^= state_ >> 27;
        return state_ * 0x2545f4914f6cdd1dULL;
    }
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

private:
    std::uint64_t state_;
};

inline orbitflags::FieldElement random_element(const orbitflags::FieldCtx& ctx, Rng& rng) {
    std::uint64_t pick = rng.below(ctx.group_order() + 1);
    return pick == ctx.group_order() ? ctx.zero()
                                     : ctx.alpha_pow(static_cast<std::int64_t>(pick));
}

inline orbitflags::FieldElement random_nonzero(const orbitflags::FieldCtx& ctx, Rng& rng) {
    return ctx.alpha_pow(static_cast<std::int64_t>(rng.below(ctx.group_order())));
}

/// Member set of the F_q-span of the given packed vectors, closed by brute
/// force over element arithmetic alone (no rref involved).
inline std::set<std::uint64_t> span_oracle(const orbitflags::FieldCtx& ctx,
                                           const std::vector<std::uint64_t>& gens) {
    using orbitflags::FieldElement;
    std::vector<FieldElement> scaled_gens;
    for (std::uint64_t g : gens) {
        FieldElement ge = ctx.from_packed(g);
        for (std::uint32_t s = 1; s < ctx.q(); ++s) {
            std::vector<std::uint32_t> coords(ctx.n(), 0);
            coords[0] = s;
            scaled_gens.push_back(ctx.mul(ge, ctx.from_coords(coords)));
        }
    }
    std::set<std::uint64_t> members{0};
    std::vector<std::uint64_t> frontier{0};
    while (!frontier.empty()) {
        std::vector<std::uint64_t> next_frontier;
        for (std::uint64_t m : frontier) {
            FieldElement me = ctx.from_packed(m);
            for (const FieldElement& g : scaled_gens) {
                std::uint64_t sum = ctx.packed(ctx.add(me, g));
                if (members.insert(sum).second)
                    next_frontier.push_back(sum);
            }
        }
        frontier = std::move(next_frontier);
    }
    return members;
}

inline std::set<std::uint64_t> member_set(const orbitflags::Subspace& u) {
    auto v = u.enumerate_packed();
    return {v.begin(), v.end()};
}

inline int dim_from_size(const orbitflags::FieldCtx& ctx, std::size_t size) {
    int d = 0;
    std::size_t acc = 1;
    while (acc < size) {
        acc *= ctx.q();
        ++d;
    }
    return d;
}

/// Subspace distance the long way: enumerate both member sets, intersect,
/// and recover dimensions from set sizes.
inline int distance_by_enumeration(const orbitflags::Subspace& u, const orbitflags::Subspace& v) {
    std::set<std::uint64_t> mu = member_set(u), mv = member_set(v);
    std::set<std::uint64_t> inter;
    std::set_intersection(mu.begin(), mu.end(), mv.begin(), mv.end(),
                          std::inserter(inter, inter.begin()));
    int du = dim_from_size(u.ctx(), mu.size());
    int dv = dim_from_size(u.ctx(), mv.size());
    int di = dim_from_size(u.ctx(), inter.size());
    return (du - di) + (dv - di);
}

inline int flag_distance_by_enumeration(const orbitflags::Flag& a, const orbitflags::Flag& b) {
    int total = 0;
    for (std::size_t i = 0; i < a.length(); ++i)
        total += distance_by_enumeration(a.at(i), b.at(i));
    return total;
}

} // namespace testutil
