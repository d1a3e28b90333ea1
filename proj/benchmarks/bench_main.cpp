#include <benchmark/benchmark.h>

#include "dyqg/core/series.hpp"
#include "dyqg/exchange/exchange.hpp"
#include "dyqg/exchange/qdybe.hpp"
#include "dyqg/intertwine/fusion.hpp"
#include "dyqg/qaff/verma.hpp"

using namespace dyqg;

static void BM_SeriesMul(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  Rng g(1);
  MatrixSeries a(4, 4, 0, n), b(4, 4, 0, n);
  for (int j = 0; j <= n; ++j)
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) {
        a[j](r, c) = {g.uniform(-1, 1), g.uniform(-1, 1)};
        b[j](r, c) = {g.uniform(-1, 1), g.uniform(-1, 1)};
      }
  for (auto _ : st) benchmark::DoNotOptimize(series_mul(a, b));
}
BENCHMARK(BM_SeriesMul)->Arg(4)->Arg(16)->Arg(64);

static void BM_VermaBuild(benchmark::State& st) {
  Params p;
  qaff::VermaOptions o;
  o.depth = static_cast<int>(st.range(0));
  for (auto _ : st) {
    qaff::TruncatedVermaModule M(p, p.lambda, p.k, o);
    benchmark::DoNotOptimize(M.order().size());
  }
}
BENCHMARK(BM_VermaBuild)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_FusionMatrix(benchmark::State& st) {
  Params p;
  for (auto _ : st) benchmark::DoNotOptimize(intertwine::fusion_matrix(p, static_cast<int>(st.range(0))).F.hi());
}
BENCHMARK(BM_FusionMatrix)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_Qdybe(benchmark::State& st) {
  Params p;
  auto X = std::make_shared<const exchange::FiniteExchange>(p, 3);
  exchange::RFunction R = [X](cplx u, cplx m, cplx k) { return (*X)(u, m, k); };
  (void)(*X)(0.1L, p.m());
  for (auto _ : st) benchmark::DoNotOptimize(exchange::verify_qdybe(R, p.m(), p.k, 1, 3, 1e-8L).worst());
}
BENCHMARK(BM_Qdybe)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
