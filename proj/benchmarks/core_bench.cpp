#include <benchmark/benchmark.h>

#include "nonneg/analysis.hpp"
#include "nonneg/hopm.hpp"
#include "nonneg/partition.hpp"
#include "nonneg/simulation.hpp"
#include "nonneg/spectral.hpp"

namespace {

using namespace nonneg;

void BM_Contract(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Tensor t = random_tensor(n, 3, 0.1, 1);
  const Vector x(n, 1.0 / static_cast<double>(n));
  for (auto _ : state) benchmark::DoNotOptimize(contract(t, x));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(t.nnz()));
}
BENCHMARK(BM_Contract)->Arg(10)->Arg(30)->Arg(60);

void BM_HopmRun(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Tensor t = random_tensor(n, 3, 0.5, 2);
  for (auto _ : state) benchmark::DoNotOptimize(hopm_run(t));
}
BENCHMARK(BM_HopmRun)->Arg(5)->Arg(20)->Arg(40);

void BM_WeakPartition(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Tensor t = random_tensor(n, 3, 0.5 / static_cast<double>(n * n) * 4.0, 3);
  for (auto _ : state) benchmark::DoNotOptimize(weak_partition(t));
}
BENCHMARK(BM_WeakPartition)->Arg(10)->Arg(50)->Arg(100);

void BM_Classify(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Tensor t = random_tensor(n, 3, 0.2, 4);
  for (auto _ : state) benchmark::DoNotOptimize(classify(t));
}
BENCHMARK(BM_Classify)->Arg(5)->Arg(15);

void BM_SpectralRadius(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Tensor t = random_tensor(n, 3, 0.05, 5);
  for (auto _ : state) benchmark::DoNotOptimize(spectral_radius(t));
}
BENCHMARK(BM_SpectralRadius)->Arg(10)->Arg(30);

}  // namespace
BENCHMARK_MAIN();
