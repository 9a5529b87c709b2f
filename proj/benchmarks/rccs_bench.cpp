#include <benchmark/benchmark.h>

#include "rccs/bell.hpp"
#include "rccs/engine.hpp"
#include "rccs/finite_space.hpp"
#include "rccs/interval_event.hpp"

namespace {

using rccs::Rational;

rccs::IntervalEvent ev(std::vector<rccs::Interval> ivs) { return rccs::IntervalEvent::from_intervals(std::move(ivs)); }

void BM_ConstructWorkedExample(benchmark::State& state) {
  const auto a = ev({{Rational(0), Rational(1, 2)}});
  const auto b = ev({{Rational(1, 10), Rational(1, 2)}, {Rational(9, 10), Rational(1)}});
  for (auto _ : state) benchmark::DoNotOptimize(rccs::construct_size3(a, b));
}
BENCHMARK(BM_ConstructWorkedExample);

// Many small pieces: cost of the interval sweeps as events fragment.
void BM_ConstructFragmented(benchmark::State& state) {
  const auto pieces = state.range(0);
  std::vector<rccs::Interval> ia;
  std::vector<rccs::Interval> ib;
  for (std::int64_t k = 0; k < pieces; ++k) {
    const Rational lo(k, pieces);
    const Rational width(1, pieces);
    ia.push_back({lo, lo + width * Rational(1, 2)});
    ib.push_back({lo + width * Rational(1, 4), lo + width * Rational(5, 8)});
  }
  const auto a = ev(ia);
  const auto b = ev(ib);
  for (auto _ : state) benchmark::DoNotOptimize(rccs::construct_size3(a, b));
  state.SetComplexityN(pieces);
}
BENCHMARK(BM_ConstructFragmented)->RangeMultiplier(4)->Range(4, 256)->Complexity();

void BM_EnumeratePartitions(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    rccs::PartitionStream stream(m, 3);
    std::size_t count = 0;
    while (stream.next()) ++count;
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_EnumeratePartitions)->DenseRange(6, 12, 2);

void BM_SearchSize3(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  std::vector<Rational> weights(m, Rational(1, static_cast<std::int64_t>(m)));
  const rccs::FiniteSpace s(weights);
  std::vector<std::uint32_t> half;
  for (std::uint32_t k = 0; k < m / 2; ++k) half.push_back(k);
  const rccs::FiniteEvent a(half);
  for (auto _ : state) benchmark::DoNotOptimize(rccs::search_rccs(s, a, a, 3));
}
BENCHMARK(BM_SearchSize3)->DenseRange(6, 10, 2);

void BM_BellValue(benchmark::State& state) {
  const auto w = rccs::bell::build_witness();
  for (auto _ : state) benchmark::DoNotOptimize(rccs::bell::bell_value(w.phi, w.obs));
}
BENCHMARK(BM_BellValue);

}  // namespace

BENCHMARK_MAIN();
