// Serial reference against the OpenMP version of each data-parallel scan.
#include <benchmark/benchmark.h>

#include <random>

#include "racg/kernels.hpp"

using namespace racg;

namespace {

SimplicialGraph random_graph(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("v" + std::to_string(100 + i));
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) edges.emplace_back(labels[static_cast<std::size_t>(i)], labels[static_cast<std::size_t>(j)]);
  return build_graph(labels, edges);
}

template <auto Kernel>
void four_cycles(benchmark::State& state) {
  auto g = random_graph(static_cast<int>(state.range(0)), 0.3, 1);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(g));
}

template <auto Kernel>
void suspensions(benchmark::State& state) {
  auto g = random_graph(static_cast<int>(state.range(0)), 0.3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(g));
}

// A dense graph with a pool that has no separating subset forces the full
// subset scan.
template <auto Kernel>
void separating_subset(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  auto g = random_graph(n + 6, 0.9, 3);
  VertexSet pool = VertexSet::first_n(n);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(g, pool));
}

}  // namespace

BENCHMARK(four_cycles<kernels::serial::induced_4cycles>)->Arg(24)->Arg(48)->Unit(benchmark::kMillisecond);
BENCHMARK(four_cycles<kernels::parallel::induced_4cycles>)->Arg(24)->Arg(48)->Unit(benchmark::kMillisecond);
BENCHMARK(suspensions<kernels::serial::separating_suspensions>)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);
BENCHMARK(suspensions<kernels::parallel::separating_suspensions>)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);
BENCHMARK(separating_subset<kernels::serial::find_separating_subset>)->Arg(14)->Arg(18)->Unit(benchmark::kMillisecond);
BENCHMARK(separating_subset<kernels::parallel::find_separating_subset>)->Arg(14)->Arg(18)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
