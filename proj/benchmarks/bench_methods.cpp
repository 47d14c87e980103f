// Microbenchmarks for the approximation methods and their support machinery.
// Instances mirror the accuracy experiments: n = 4, k = 4, s focal elements.
//
// Run: ./bfa_benchmarks [--benchmark_filter=...]

#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "bfa/approx.hpp"
#include "bfa/consistency.hpp"
#include "bfa/experiments.hpp"
#include "bfa/partition.hpp"
#include "bfa/random.hpp"

namespace {

bfa::MassFunction instance_for(int s) {
  const bfa::Frame frame = bfa::default_frame(4);
  std::mt19937_64 rng(bfa::mix_seed({0xBE9Cull, static_cast<std::uint64_t>(s)}));
  return bfa::random_mass_function(frame, s, rng);
}

bfa::ApproxOptions options_for(int k) {
  bfa::ApproxOptions options;
  options.k = k;
  options.seed = 99;
  return options;
}

void BM_Method(benchmark::State& state, bfa::Method method) {
  const auto s = static_cast<int>(state.range(0));
  const bfa::MassFunction m = instance_for(s);
  const bfa::ApproxOptions options = options_for(4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bfa::approximate(m, method, options));
  }
  state.SetComplexityN(s);
}

void BM_StrongConsistency(benchmark::State& state) {
  const auto s = static_cast<int>(state.range(0));
  const bfa::MassFunction m = instance_for(s);
  const bfa::ApproxResult approx = bfa::pair_approximation(m, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bfa::is_strongly_consistent(approx.mass, m));
  }
}

void BM_PartitionEnumeration(benchmark::State& state) {
  const auto s = static_cast<int>(state.range(0));
  for (auto _ : state) {
    bfa::PartitionEnumerator stream(s, 4);
    std::size_t count = 0;
    while (stream.next()) ++count;
    benchmark::DoNotOptimize(count);
  }
}

}  // namespace

BENCHMARK_CAPTURE(BM_Method, optimal, bfa::Method::optimal)->DenseRange(5, 13, 2);
BENCHMARK_CAPTURE(BM_Method, pair, bfa::Method::pair)->DenseRange(5, 15, 2);
BENCHMARK_CAPTURE(BM_Method, single, bfa::Method::single)->DenseRange(5, 15, 2);
BENCHMARK_CAPTURE(BM_Method, ratio, bfa::Method::ratio)->DenseRange(5, 15, 2);
BENCHMARK_CAPTURE(BM_Method, lump, bfa::Method::lump)->DenseRange(5, 15, 2);
BENCHMARK_CAPTURE(BM_Method, iterative, bfa::Method::iterative)->DenseRange(5, 15, 2);
BENCHMARK_CAPTURE(BM_Method, summarization, bfa::Method::summarization)
    ->DenseRange(5, 15, 2);
BENCHMARK_CAPTURE(BM_Method, bayesian, bfa::Method::bayesian)->DenseRange(5, 15, 2);
BENCHMARK_CAPTURE(BM_Method, consonant, bfa::Method::consonant)->DenseRange(5, 15, 2);
BENCHMARK_CAPTURE(BM_Method, klx, bfa::Method::klx)->DenseRange(5, 15, 2);

BENCHMARK(BM_StrongConsistency)->DenseRange(5, 15, 5);
BENCHMARK(BM_PartitionEnumeration)->DenseRange(8, 12, 2);

BENCHMARK_MAIN();
