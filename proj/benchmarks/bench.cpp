#include <cstdint>
#include <vector>

#include <benchmark/benchmark.h>

#include "orbitflags/flagcodes.hpp"
#include "orbitflags/fqlinalg.hpp"

namespace {

using namespace orbitflags;

const FieldCtx& field_2_12() {
    static FieldCtx ctx(2, 1, 12);
    return ctx;
}

void BM_FieldMul(benchmark::State& state) {
    const FieldCtx& ctx = field_2_12();
    FieldElement a = ctx.alpha_pow(917), b = ctx.alpha_pow(2641);
    for (auto _ : state) {
        a = ctx.mul(a, b);
        benchmark::DoNotOptimize(a);
    }
}
BENCHMARK(BM_FieldMul);

void BM_FieldAdd(benchmark::State& state) {
    const FieldCtx& ctx = field_2_12();
    FieldElement a = ctx.alpha_pow(917), b = ctx.alpha_pow(2641);
    for (auto _ : state) {
        benchmark::DoNotOptimize(ctx.add(a, b));
    }
}
BENCHMARK(BM_FieldAdd);

void BM_Rref(benchmark::State& state) {
    const FieldCtx& ctx = field_2_12();
    std::vector<std::uint64_t> rows;
    std::uint64_t x = 0x9e3779b9;
    for (int i = 0; i < 8; ++i) {
        x ^= x << 13, x ^= x >> 7, x ^= x << 17;
        rows.push_back(x & (ctx.q_pow(ctx.n()) - 1));
    }
    FqMatrix m(ctx, ctx.n(), rows);
    for (auto _ : state) {
        FqMatrix r = rref(m);
        benchmark::DoNotOptimize(r.row_count());
    }
}
BENCHMARK(BM_Rref);

void BM_SubspaceDistance(benchmark::State& state) {
    const FieldCtx& ctx = field_2_12();
    Subspace u = Subspace::subfield(ctx, 6);
    Subspace v = u.scaled(ctx.alpha_pow(7));
    for (auto _ : state) {
        benchmark::DoNotOptimize(subspace_distance(u, v));
    }
}
BENCHMARK(BM_SubspaceDistance);

void BM_OrbitEnumeration(benchmark::State& state) {
    const FieldCtx& ctx = field_2_12();
    Subspace u = Subspace::subfield(ctx, 2);
    for (auto _ : state) {
        SubspaceOrbit orbit = orbit_subspace(u, ctx.alpha());
        benchmark::DoNotOptimize(orbit.elements.size());
    }
}
BENCHMARK(BM_OrbitEnumeration);

void BM_WeavedCodeDistance(benchmark::State& state) {
    FieldCtx ctx(2, 1, 10);
    Flag flag = weaved_flag(ctx, {1, 5});
    for (auto _ : state) {
        FlagCode code(flag, ctx.alpha());
        benchmark::DoNotOptimize(code_min_distance(code));
    }
}
BENCHMARK(BM_WeavedCodeDistance);

} // namespace

BENCHMARK_MAIN();
