#include <benchmark/benchmark.h>

#include "padicval/analysis.hpp"
#include "padicval/expr.hpp"
#include "padicval/reference.hpp"

using namespace padicval;

namespace {

const IntPolynomial& example_q() {
  static const IntPolynomial q = parse_poly("x^5+2x^3+3");
  return q;
}

void BM_TermValuationsParallel(benchmark::State& state) {
  const RecurrenceSpec spec = make_spec(example_q());
  for (auto _ : state) benchmark::DoNotOptimize(term_valuations(spec, Prime(5), static_cast<std::uint64_t>(state.range(0))));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_TermValuationsSerial(benchmark::State& state) {
  const RecurrenceSpec spec = make_spec(example_q());
  for (auto _ : state)
    benchmark::DoNotOptimize(reference::term_valuations(spec, Prime(5), static_cast<std::uint64_t>(state.range(0))));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_DirectParallel(benchmark::State& state) {
  const RecurrenceSpec spec = make_spec(example_q());
  for (auto _ : state) benchmark::DoNotOptimize(valuation_tn_direct(spec, Prime(5), static_cast<std::uint64_t>(state.range(0))));
}

void BM_DirectSerial(benchmark::State& state) {
  const RecurrenceSpec spec = make_spec(example_q());
  for (auto _ : state)
    benchmark::DoNotOptimize(reference::valuation_tn_direct(spec, Prime(5), static_cast<std::uint64_t>(state.range(0))));
}

void BM_Fast(benchmark::State& state) {
  const RecurrenceSpec spec = make_spec(example_q());
  for (auto _ : state) benchmark::DoNotOptimize(valuation_tn_fast(spec, Prime(5), static_cast<std::uint64_t>(state.range(0))));
}

void BM_ScanParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(scan_primes(example_q(), static_cast<std::size_t>(state.range(0))));
}

void BM_ScanSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(reference::scan_primes(example_q(), static_cast<std::size_t>(state.range(0))));
}

void BM_ExactSlope(benchmark::State& state) {
  const IntPolynomial q = parse_poly("x^8+x^5+x^3+1");
  for (auto _ : state) benchmark::DoNotOptimize(exact_slope(q, Prime(5)));
}

}  // namespace

BENCHMARK(BM_TermValuationsParallel)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TermValuationsSerial)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DirectParallel)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DirectSerial)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Fast)->Arg(100000)->Arg(1000000)->Arg(1000000000)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_ScanParallel)->Arg(1000)->Arg(5000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScanSerial)->Arg(1000)->Arg(5000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExactSlope)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
