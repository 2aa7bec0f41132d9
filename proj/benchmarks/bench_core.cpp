#include <benchmark/benchmark.h>

#include "picard/ball.hpp"
#include "picard/cocycle.hpp"
#include "picard/group.hpp"
#include "picard/presentation.hpp"

using namespace picard;

static void BM_EvaluateWord(benchmark::State& state) {
  Rng rng(1);
  const Word w = sample_word(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(evaluate(w));
}
BENCHMARK(BM_EvaluateWord)->Arg(8)->Arg(32)->Arg(64);

static void BM_SigmaExact(benchmark::State& state) {
  Rng rng(2);
  const GroupMatrix g = evaluate(sample_word(rng, 30)), h = evaluate(sample_word(rng, 30));
  for (auto _ : state) benchmark::DoNotOptimize(sigma(g, h));
}
BENCHMARK(BM_SigmaExact);

static void BM_SigmaNumeric(benchmark::State& state) {
  Rng rng(3);
  const int d = static_cast<int>(state.range(0));
  const NumericMatrix g = random_su(rng, d), h = random_su(rng, d);
  for (auto _ : state) benchmark::DoNotOptimize(sigma_value(g, h));
}
BENCHMARK(BM_SigmaNumeric)->Arg(2)->Arg(4);

static void BM_Expm(benchmark::State& state) {
  Rng rng(4);
  const ComplexMatrix a = random_su_algebra(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(expm(a));
}
BENCHMARK(BM_Expm)->Arg(2)->Arg(4);

static void BM_SmithForm(benchmark::State& state) {
  const IntegerMatrix m = exponent_matrix(bundled_presentation());
  for (auto _ : state) benchmark::DoNotOptimize(snf(m));
}
BENCHMARK(BM_SmithForm);

static void BM_HermiteFormExtension(benchmark::State& state) {
  const auto& p = bundled_presentation();
  const ExtensionPresentation ext = build_extension(p, compute_defects(p));
  for (auto _ : state) benchmark::DoNotOptimize(hnf(ext.relation_matrix));
}
BENCHMARK(BM_HermiteFormExtension);

static void BM_DeriveKappa(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(derive_kappa());
}
BENCHMARK(BM_DeriveKappa);

static void BM_KappaOfWord(benchmark::State& state) {
  const SplitPipeline pipe = derive_kappa();
  Rng rng(5);
  const Word w = sample_word(rng, 30);
  for (auto _ : state) benchmark::DoNotOptimize(kappa(pipe.kappa, w));
}
BENCHMARK(BM_KappaOfWord);
BENCHMARK_MAIN();
