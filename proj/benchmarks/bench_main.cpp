#include <benchmark/benchmark.h>

#include "skeinlab/colored_states.hpp"
#include "skeinlab/fixtures.hpp"
#include "skeinlab/quantum.hpp"
#include "skeinlab/temperley_lieb.hpp"

using namespace skeinlab;

namespace {

const LinkDiagram& fixture(const char* name) {
  static const FixtureSet set = load_default_fixtures();
  return set.get(name).diagram;
}

const char* const kNames[] = {"3_1", "4_1", "5_2", "6_3", "L5a1"};

void BM_Bracket(benchmark::State& state) {
  const auto& d = fixture(kNames[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(bracket(d));
  state.SetLabel(kNames[state.range(0)]);
}
BENCHMARK(BM_Bracket)->DenseRange(0, 4);

void BM_BracketBruteForce(benchmark::State& state) {
  const auto& d = fixture(kNames[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(bracket_bruteforce(d));
  state.SetLabel(kNames[state.range(0)]);
}
BENCHMARK(BM_BracketBruteForce)->DenseRange(0, 4);

void BM_ColoredJonesTrefoil(benchmark::State& state) {
  const auto& d = fixture("3_1");
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(colored_jones(d, n));
}
BENCHMARK(BM_ColoredJonesTrefoil)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_ColoredJones6_3(benchmark::State& state) {
  const auto& d = fixture("6_3");
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(colored_jones(d, n));
}
BENCHMARK(BM_ColoredJones6_3)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_BStateUpsilon(benchmark::State& state) {
  const auto& d = fixture("4_1");
  const int n = static_cast<int>(state.range(0));
  const auto u = build_upsilon(d, n, ColoredState::all_minus(d.crossing_count(), n));
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_rational(u));
}
BENCHMARK(BM_BStateUpsilon)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_MorsePlan(benchmark::State& state) {
  const auto s = colored_diagram(fixture("6_3"), static_cast<int>(state.range(0))).without_wires();
  for (auto _ : state) benchmark::DoNotOptimize(morse_decompose(s));
}
BENCHMARK(BM_MorsePlan)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

// Cold Wenzl recursion is memoized, so this measures multiplication in TL_n instead.
void BM_TLSquareOfProjector(benchmark::State& state) {
  const TLElement& f = jones_wenzl(static_cast<int>(state.range(0))).element;
  for (auto _ : state) benchmark::DoNotOptimize(tl_multiply(f, f));
}
BENCHMARK(BM_TLSquareOfProjector)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
