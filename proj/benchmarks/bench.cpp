// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include "wzeta/contfrac.hpp"
#include "wzeta/dirichlet.hpp"
#include "wzeta/hurwitz.hpp"
#include "wzeta/wz.hpp"
#include "wzeta/wz_catalog.hpp"

using namespace wzeta;

namespace {

void BM_Zeta2Fast(benchmark::State& state) {
  const PrecisionContext ctx(static_cast<int>(state.range(0)));
  std::int64_t terms = 0;
  for (auto _ : state) {
    SeriesResult r = zeta2_fast(make_rational(1, 5), ctx);
    terms = r.terms_used;
    benchmark::DoNotOptimize(r.value);
  }
  state.counters["terms"] = static_cast<double>(terms);
}
BENCHMARK(BM_Zeta2Fast)->RangeMultiplier(10)->Range(100, 10000)->Unit(benchmark::kMillisecond);

void BM_Zeta3Fast(benchmark::State& state) {
  const PrecisionContext ctx(static_cast<int>(state.range(0)));
  std::int64_t terms = 0;
  for (auto _ : state) {
    SeriesResult r = zeta3_fast(make_rational(1, 5), ctx);
    terms = r.terms_used;
    benchmark::DoNotOptimize(r.value);
  }
  state.counters["terms"] = static_cast<double>(terms);
}
BENCHMARK(BM_Zeta3Fast)->RangeMultiplier(10)->Range(100, 10000)->Unit(benchmark::kMillisecond);

void BM_Zeta2Simple(benchmark::State& state) {
  const PrecisionContext ctx(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(zeta2_simple(make_rational(1, 5), ctx).value);
}
BENCHMARK(BM_Zeta2Simple)->RangeMultiplier(10)->Range(100, 1000)->Unit(benchmark::kMillisecond);

void BM_Zeta3ContinuedFraction(benchmark::State& state) {
  const PrecisionContext ctx(static_cast<int>(state.range(0)));
  const std::int64_t depth = plan_terms(ctx.digits(), 1024) + 10;
  const CFSpec cf = zeta3_cf_spec();
  for (auto _ : state) benchmark::DoNotOptimize(eval_cf_backward(cf, depth, ctx));
}
BENCHMARK(BM_Zeta3ContinuedFraction)->RangeMultiplier(10)->Range(100, 1000)->Unit(benchmark::kMillisecond);

void BM_LMinus8Decomposition(benchmark::State& state) {
  const PrecisionContext ctx(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(l_value(CharacterSpec(-8), 2, ctx).value);
}
BENCHMARK(BM_LMinus8Decomposition)->Arg(500)->Unit(benchmark::kMillisecond);

void BM_CheckWz(benchmark::State& state) {
  const auto pair = catalog::fast_zeta3();
  const std::vector<BigRational> ks = {0, make_rational(1, 3), make_rational(2, 5), make_rational(5, 7)};
  for (auto _ : state) benchmark::DoNotOptimize(check_wz(pair.F, pair.G, 0, 6, ks).holds);
}
BENCHMARK(BM_CheckWz)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
