#include <benchmark/benchmark.h>

#include <cmath>

#include "nuframe/framekit.hpp"
#include "nuframe/harmonic.hpp"
#include "nuframe/random.hpp"

using namespace nuframe;

namespace {

StepFunction input(int p, int resolution) {
  SuiteRng rng(7);
  return random_step(rng, std::make_shared<const LocalField>(default_field_config(p, 1)), resolution, 0);
}

void BM_DirectTransform(benchmark::State& state) {
  const auto f = input(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(transform(f));
  state.SetComplexityN(static_cast<std::int64_t>(f.cells().size()));
}

void BM_FastTransform(benchmark::State& state) {
  const auto f = input(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(fast_transform(f));
  state.SetComplexityN(static_cast<std::int64_t>(f.cells().size()));
}

void BM_UepGramFourier(benchmark::State& state) {
  const auto field = std::make_shared<const LocalField>(default_field_config(static_cast<int>(state.range(0)), 1));
  SystemConfig sys = make_system(field, 1, 1);
  const double s = 1.0 / std::sqrt(static_cast<double>(field->q()));
  for (std::uint32_t ell = 0; ell < field->q(); ++ell) {
    std::map<LambdaIndex, Complex> coeffs;
    for (std::uint32_t n = 0; n < field->q(); ++n) {
      const auto [re, im] = field->root_of_unity(static_cast<int>((ell * n) % field->q()));
      coeffs[LambdaIndex{n, false}] = Complex{re, im} * s;
    }
    sys.masks.push_back(make_mask(std::move(coeffs), sys));
  }
  for (auto _ : state) benchmark::DoNotOptimize(uep_gram(sys));
}

}  // namespace

BENCHMARK(BM_DirectTransform)->ArgsProduct({{2}, {4, 6, 8}})->ArgsProduct({{3}, {3, 4, 5}});
BENCHMARK(BM_FastTransform)->ArgsProduct({{2}, {4, 6, 8, 10}})->ArgsProduct({{3}, {3, 4, 5, 6}});
BENCHMARK(BM_UepGramFourier)->Arg(2)->Arg(3)->Arg(5);
BENCHMARK_MAIN();
