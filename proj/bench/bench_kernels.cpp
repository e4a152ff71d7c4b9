// Serial reference vs OpenMP kernel, same inputs for both.

#include "germlab/dynamics/neumann.hpp"
#include "germlab/dynamics/probes.hpp"
#include "germlab/fullgroup/schreier.hpp"
#include "germlab/par/patch_bfs.hpp"
#include "germlab/par/tree_sweeps.hpp"
#include "germlab/rng.hpp"

#include <benchmark/benchmark.h>

using namespace germlab;

namespace {

// Frontier of the radius-5 sphere in F marked by {a, b, e}, expanded once.
template <bool Parallel>
void BM_expand_layer(benchmark::State& state) {
  const auto G = dynamics::group_F_marked_e();
  const auto b = dynamics::ball(G, 5);
  std::vector<par::Entry<circle::PLMap>> frontier;
  std::set<circle::PLMap> seen;
  for (std::size_t i = 0; i < b.size(); ++i) {
    seen.insert(b.entries[i].element);
    if (b.lengths[i] == 5) frontier.push_back(b.entries[i]);
  }
  for (auto _ : state) {
    auto s = seen;
    auto next = Parallel ? par::expand_layer(frontier, G.gens, s) : par::expand_layer_serial(frontier, G.gens, s);
    benchmark::DoNotOptimize(next);
  }
  state.counters["frontier"] = static_cast<double>(frontier.size());
}

template <bool Parallel>
void BM_neumann_sweep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto s = Parallel ? par::neumann_sweep(n, 4) : par::neumann_sweep_serial(n, 4);
    benchmark::DoNotOptimize(s);
  }
}

template <bool Parallel>
void BM_cocycle(benchmark::State& state) {
  const auto ctx = trees::GffContext::standard();
  Rng rng(1);
  const auto g = trees::random_tree_aut(ctx, rng, 3, 4);
  const auto h = trees::random_tree_aut(ctx, rng, 3, 4);
  const auto B = ctx->tree.ball(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(Parallel ? par::cocycle_violations(g, h, B) : par::cocycle_violations_serial(g, h, B));
  state.counters["vertices"] = static_cast<double>(B.size());
}

template <bool Parallel>
void BM_level_pairs(benchmark::State& state) {
  const auto ctx = trees::GffContext::standard();
  const int depth = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto s = Parallel ? par::level_pairs(ctx, "0123401234", depth, 4)
                      : par::level_pairs_serial(ctx, "0123401234", depth, 4);
    benchmark::DoNotOptimize(s);
  }
}

template <bool Parallel>
void BM_patch_bfs(benchmark::State& state) {
  const auto p = fullgroup::schreier_patch({"01"}, 3, cantor::EventuallyPeriodic("01", "0"),
                                           static_cast<int>(state.range(0)));
  std::vector<std::size_t> sources(p.vertices.size());
  for (std::size_t i = 0; i < sources.size(); ++i) sources[i] = i;
  for (auto _ : state) {
    auto d = Parallel ? par::bfs_from_sources(p.adjacency, sources) : par::bfs_from_sources_serial(p.adjacency, sources);
    benchmark::DoNotOptimize(d);
  }
  state.counters["vertices"] = static_cast<double>(p.vertices.size());
}

}  // namespace

BENCHMARK(BM_expand_layer<false>)->Name("expand_layer/serial")->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_expand_layer<true>)->Name("expand_layer/omp")->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_neumann_sweep<false>)->Name("neumann_sweep/serial")->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_neumann_sweep<true>)->Name("neumann_sweep/omp")->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_cocycle<false>)->Name("cocycle/serial")->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_cocycle<true>)->Name("cocycle/omp")->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_level_pairs<false>)->Name("level_pairs/serial")->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_level_pairs<true>)->Name("level_pairs/omp")->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_patch_bfs<false>)->Name("patch_bfs/serial")->Arg(400)->Arg(1600)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_patch_bfs<true>)->Name("patch_bfs/omp")->Arg(400)->Arg(1600)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
