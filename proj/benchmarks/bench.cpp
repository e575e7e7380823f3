#include <benchmark/benchmark.h>

#include "tlk/burnside.hpp"
#include "tlk/monoid.hpp"
#include "tlk/twisted.hpp"

using namespace tlk;

static void BM_ScalarProduct(benchmark::State& state) {
  const Scalar x = Scalar::parse("(a*d - b*f)/(c + d)"), y = Scalar::parse("(d^2 - ď*f)/(a*b)");
  for (auto _ : state) benchmark::DoNotOptimize(x * y + x / y);
}
BENCHMARK(BM_ScalarProduct);

static void BM_BuildContext(benchmark::State& state, const char* type, const char* sigma) {
  for (auto _ : state) benchmark::DoNotOptimize(TwistedContext::from_spec(type, sigma).dimension());
}
BENCHMARK_CAPTURE(BM_BuildContext, A5, "A5", "full")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_BuildContext, E6, "E6", "full")->Unit(benchmark::kMillisecond);

static void BM_Blocks(benchmark::State& state) {
  const auto ctx = TwistedContext::from_spec("E6", "full");
  for (auto _ : state)
    for (std::size_t j = 0; j < ctx.generators().size(); ++j) benchmark::DoNotOptimize(verify_blocks(ctx, j).ok());
}
BENCHMARK(BM_Blocks)->Unit(benchmark::kMillisecond);

static void BM_Burnside(benchmark::State& state, const char* type, const char* sigma, Backend backend) {
  const auto ctx = TwistedContext::from_spec(type, sigma);
  const auto at = Specialization::parse("a=1,b=1,d=2,f=3");
  for (auto _ : state) benchmark::DoNotOptimize(burnside_certificate(ctx, at, 1000000, backend).dimension);
}
BENCHMARK_CAPTURE(BM_Burnside, B3_exact, "A5", "full", Backend::Exact)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Burnside, B3_modp, "A5", "full", Backend::ModP)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Burnside, F4_modp, "E6", "full", Backend::ModP)->Unit(benchmark::kMillisecond);

static void BM_Faithful(benchmark::State& state) {
  const auto ctx = TwistedContext::from_spec("D4", "order3");
  for (auto _ : state) benchmark::DoNotOptimize(faithfulness_spotcheck(ctx, 6).ok());
}
BENCHMARK(BM_Faithful)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
