#include "lvoa/characters.hpp"
#include "lvoa/screening.hpp"

#include <benchmark/benchmark.h>

namespace {

const lvoa::ScreeningLattices& b2() {
  static const auto sl = lvoa::build_screening_lattices(lvoa::build_root_system('B', 2), 4);
  return sl;
}

void BM_KernelReportB2(benchmark::State& state) {
  const auto& sl = b2();
  auto scr = lvoa::short_screening_set(sl);
  auto coset = lvoa::named_coset(sl, "blue");
  for (auto _ : state) benchmark::DoNotOptimize(lvoa::kernel_report(sl, coset, scr, static_cast<int>(state.range(0)), "blue"));
}
BENCHMARK(BM_KernelReportB2)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_ThetaCoset(benchmark::State& state) {
  const auto& sl = b2();
  auto coset = lvoa::named_coset(sl, "steinberg");
  for (auto _ : state) benchmark::DoNotOptimize(lvoa::theta_coset(sl, coset, sl.Q, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_ThetaCoset)->Arg(20)->Arg(80)->Unit(benchmark::kMillisecond);

void BM_GradedDimension(benchmark::State& state) {
  const auto& sl = b2();
  auto coset = lvoa::named_coset(sl, "center");
  for (auto _ : state) benchmark::DoNotOptimize(lvoa::graded_dim_module(sl, coset, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_GradedDimension)->Arg(20)->Arg(60)->Unit(benchmark::kMillisecond);

void BM_VirasoroBracket(benchmark::State& state) {
  const auto& sl = b2();
  lvoa::VirasoroAction vir(lvoa::stress_tensor(sl));
  std::vector<lvoa::FieldElement> states;
  auto blue = lvoa::named_coset(sl, "blue");
  for (int h = 0; h <= state.range(0); ++h)
    for (auto& v : lvoa::layer_basis(sl, blue, h).basis()) states.push_back(std::move(v));
  for (auto _ : state) benchmark::DoNotOptimize(lvoa::commutator_check(vir, 2, -3, states));
}
BENCHMARK(BM_VirasoroBracket)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_ScreeningApply(benchmark::State& state) {
  const auto& sl = b2();
  auto scr = lvoa::short_screening_set(sl);
  auto layer = lvoa::layer_basis(sl, lvoa::named_coset(sl, "green"), 2).basis();
  for (auto _ : state)
    for (const auto& v : layer) benchmark::DoNotOptimize(lvoa::apply_screening(sl.amb, scr[0], v));
}
BENCHMARK(BM_ScreeningApply)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
