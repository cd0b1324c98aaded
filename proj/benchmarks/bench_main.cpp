#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "copsrob/experiments.hpp"
#include "copsrob/generators.hpp"
#include "copsrob/matching.hpp"
#include "copsrob/metrics.hpp"
#include "copsrob/rng.hpp"
#include "copsrob/solver.hpp"

using namespace copsrob;

// Exact capture time on the q x q grid with k cops.
static void BM_CaptureTimeGrid(benchmark::State& state) {
  const Graph g = gen_grid(2, static_cast<std::size_t>(state.range(0))).graph;
  const auto k = static_cast<std::size_t>(state.range(1));
  std::uint64_t states = 0;
  for (auto _ : state) {
    const auto r = capture_time(g, k);
    states = r.states;
    benchmark::DoNotOptimize(r.value);
  }
  state.counters["states"] = static_cast<double>(states);
}
BENCHMARK(BM_CaptureTimeGrid)->Args({4, 2})->Args({6, 2})->Args({8, 2})->Args({4, 4})->Unit(benchmark::kMillisecond);

static void BM_CaptureTimeGnp(benchmark::State& state) {
  const Graph g = gen_gnp(10, 0.5, 3);
  const auto k = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(capture_time(g, k).value);
}
BENCHMARK(BM_CaptureTimeGnp)->DenseRange(1, 5)->Unit(benchmark::kMillisecond);

static void BM_KCenter(benchmark::State& state) {
  const Graph g = gen_gnp(40, 0.2, 11);
  const auto mode = state.range(1) == 0 ? KCenterMode::exact : KCenterMode::greedy;
  for (auto _ : state) benchmark::DoNotOptimize(k_center(g, static_cast<std::size_t>(state.range(0)), mode).radius);
}
BENCHMARK(BM_KCenter)->Args({3, 0})->Args({3, 1})->Args({6, 1})->Unit(benchmark::kMicrosecond);

// Random bipartite graphs with left side n, right side 2n, degree 4.
static void BM_HopcroftKarp(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(5);
  std::vector<std::vector<std::uint32_t>> adj(n);
  for (auto& row : adj) {
    for (int i = 0; i < 4; ++i) row.push_back(static_cast<std::uint32_t>(rng.uniform_below(2 * n)));
  }
  for (auto _ : state) benchmark::DoNotOptimize(hopcroft_karp(2 * n, adj).size);
}
BENCHMARK(BM_HopcroftKarp)->Range(64, 16384)->Unit(benchmark::kMicrosecond);

static void BM_McSphereTrap(benchmark::State& state) {
  McConfig c;
  c.graph = "gnp:500,0.5";
  c.k = 558;
  c.cops = {"sphere-trap", {{"d", "auto"}, {"C", 10}}};
  c.robber = {"greedy", nlohmann::json::object()};
  c.trials = static_cast<std::size_t>(state.range(0));
  c.seed = 7;
  for (auto _ : state) benchmark::DoNotOptimize(mc_run(c, 1).certified);
}
BENCHMARK(BM_McSphereTrap)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
