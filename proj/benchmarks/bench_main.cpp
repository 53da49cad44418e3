#include <benchmark/benchmark.h>

#include "lerchz/lerchz.hpp"

using namespace lerchz;

namespace {

void BM_HurwitzCentral(benchmark::State& state) {
  ConfigScope scope(static_cast<unsigned>(state.range(0)));
  const Complex half(0.5, 0.0);
  for (auto _ : state) benchmark::DoNotOptimize(hurwitz_em(Rational(1, 3), half));
}
BENCHMARK(BM_HurwitzCentral)->Arg(20)->Arg(40)->Arg(100);

void BM_LerchRoute(benchmark::State& state) {
  ConfigScope scope(40);
  const LerchArgument arg(Rational(1, 3), Rational(1, 2), Complex(0.5, 2.0));
  const auto route = static_cast<Route>(state.range(0));
  state.SetLabel(route_name(route));
  for (auto _ : state) benchmark::DoNotOptimize(lerch_route(arg, route));
}
BENCHMARK(BM_LerchRoute)
    ->Arg(static_cast<int>(Route::Taylor))
    ->Arg(static_cast<int>(Route::Integral))
    ->Arg(static_cast<int>(Route::Continuation));

void BM_DirichletCentral(benchmark::State& state) {
  ConfigScope scope(40);
  const auto chi = DirichletCharacter::quadratic(state.range(0));
  const Complex half(0.5, 0.0);
  for (auto _ : state) benchmark::DoNotOptimize(dirichlet_l(chi, half));
}
BENCHMARK(BM_DirichletCentral)->Arg(101)->Arg(1009);

void BM_FrequencyRow(benchmark::State& state) {
  ConfigScope scope(30);
  const Complex half(0.5, 0.0);
  for (auto _ : state) benchmark::DoNotOptimize(lerch_frequency_row(Rational(1), half, state.range(0)));
}
BENCHMARK(BM_FrequencyRow)->Arg(101)->Arg(401);

void BM_WideMoment(benchmark::State& state) {
  ConfigScope scope(30);
  const WideMomentSpec spec(state.range(0), 3);
  for (auto _ : state) {
    if (state.range(1) == 0)
      benchmark::DoNotOptimize(wide_moment_brute(spec));
    else
      benchmark::DoNotOptimize(wide_moment_fourier(spec));
  }
  state.SetLabel(state.range(1) == 0 ? "brute" : "fourier");
}
BENCHMARK(BM_WideMoment)->Args({13, 0})->Args({13, 1})->Args({31, 0})->Args({31, 1})->Unit(benchmark::kMillisecond);

void BM_PowerMoment(benchmark::State& state) {
  ConfigScope scope(20);
  for (auto _ : state) benchmark::DoNotOptimize(hurwitz_power_moment(state.range(0), 4));
}
BENCHMARK(BM_PowerMoment)->Arg(101)->Arg(1009)->Unit(benchmark::kMillisecond);

void BM_CountNonvanishing(benchmark::State& state) {
  ConfigScope scope(20);
  WideMomentSpec spec(state.range(0), 3);
  spec.primitive_only = true;
  for (auto _ : state) benchmark::DoNotOptimize(count_nonvanishing(spec).certified);
}
BENCHMARK(BM_CountNonvanishing)->Arg(31)->Arg(101)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
