// Microbenchmarks for the hot paths: field multiply, ring multiply, the Gray
// map, polynomial multiply, the (x+1)-basis butterfly, span construction, and
// the exhaustive weight search.
#include <benchmark/benchmark.h>

#include <cstdint>

#include "u3cyclic/chain_ring.hpp"
#include "u3cyclic/codespec.hpp"
#include "u3cyclic/gf2m.hpp"
#include "u3cyclic/oracle.hpp"
#include "u3cyclic/polyring.hpp"

using namespace u3c;

namespace {

CodeSpec type3_spec(unsigned sigma, unsigned m) {
    CodeSpec s;
    s.sigma = sigma;
    s.m = m;
    s.type = 3;
    s.ell = 1;
    s.t = 0;
    s.z = UnitPoly::one();
    return s;
}

void BM_field_mul(benchmark::State& state) {
    const FieldCtx ctx = FieldCtx::make(unsigned(state.range(0)));
    const uint32_t q = 1u << ctx.m;
    uint32_t a = 1, b = q - 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(mul(fe(ctx, a), fe(ctx, b)).bits);
        a = (a + 1) & (q - 1);
        b = (b * 5 + 3) & (q - 1);
        if (a == 0) a = 1;
    }
}
BENCHMARK(BM_field_mul)->Arg(2)->Arg(4)->Arg(8);

void BM_ring_mul(benchmark::State& state) {
    const FieldCtx ctx = FieldCtx::make(unsigned(state.range(0)));
    const uint32_t q = 1u << ctx.m;
    const RingElement x = re(ctx, 1, q - 1, 1);
    const RingElement y = re(ctx, q - 1, 1, q - 1);
    for (auto _ : state) benchmark::DoNotOptimize(ring_mul(x, y).a.bits);
}
BENCHMARK(BM_ring_mul)->Arg(2)->Arg(4);

void BM_gray_map(benchmark::State& state) {
    const FieldCtx ctx = FieldCtx::make(unsigned(state.range(0)));
    const auto B = find_tob(ctx);
    const uint32_t q = 1u << ctx.m;
    uint32_t i = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            gray_map(re(ctx, i & (q - 1), (i >> 1) & (q - 1), 1), B));
        ++i;
    }
}
BENCHMARK(BM_gray_map)->Arg(2)->Arg(4);

void BM_poly_mul(benchmark::State& state) {
    const FieldCtx ctx = FieldCtx::make(2);
    const unsigned sigma = unsigned(state.range(0));
    const PolyS f = poly_xp1_pow(ctx, sigma, 1, re(ctx, 1, 2, 3));
    const PolyS g = poly_xp1_pow(ctx, sigma, 2, re(ctx, 3, 1, 0));
    for (auto _ : state)
        benchmark::DoNotOptimize(poly_mul(f, g).coeffs[0].a.bits);
}
BENCHMARK(BM_poly_mul)->Arg(3)->Arg(5);

void BM_butterfly(benchmark::State& state) {
    const FieldCtx ctx = FieldCtx::make(2);
    const unsigned sigma = unsigned(state.range(0));
    PolyS f = poly_zero(ctx, sigma);
    for (unsigned i = 0; i < f.n; ++i)
        f.coeffs[i] = re(ctx, i & 3, (i >> 1) & 3, 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(to_xp1(f).coeffs[0].a.bits);
}
BENCHMARK(BM_butterfly)->Arg(3)->Arg(5);

void BM_build_span(benchmark::State& state) {
    const unsigned m = unsigned(state.range(0));
    const FieldCtx ctx = FieldCtx::make(m);
    const auto B = find_tob(ctx);
    const CodeSpec s = type3_spec(2, m);
    for (auto _ : state)
        benchmark::DoNotOptimize(build_span(s, B).rows.size());
}
BENCHMARK(BM_build_span)->Arg(1)->Arg(2);

void BM_min_weights(benchmark::State& state) {
    const FieldCtx ctx = FieldCtx::make(1);
    const auto B = find_tob(ctx);
    CodeSpec s;
    s.sigma = unsigned(state.range(0));
    s.type = 3;
    s.ell = 1;
    const auto span = build_span(s, B);
    for (auto _ : state)
        benchmark::DoNotOptimize(min_weights(span, B).d_lee);
}
BENCHMARK(BM_min_weights)->Arg(2)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
