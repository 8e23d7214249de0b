// Wall-clock microbenchmarks over the archive backends and the front sorter.
// Comparison counts are the library's own metric; these runs exist to catch
// constant-factor regressions that counting cannot see.

#include <benchmark/benchmark.h>

#include <map>

#include "pareto/archive.hpp"
#include "pareto/datasets.hpp"
#include "pareto/nds.hpp"

using pareto::Backend;
using pareto::ComparisonCounter;
using pareto::PointStream;

namespace {

const PointStream& shell_stream(std::size_t p, std::size_t n) {
  static std::map<std::pair<std::size_t, std::size_t>, PointStream> cache;
  auto [it, fresh] = cache.try_emplace({p, n});
  if (fresh) {
    it->second = pareto::gen_convex({.points = n, .objectives = p,
                                     .value_max = 10000, .epsilon = 0.1,
                                     .seed = 1});
  }
  return it->second;
}

void replay_stream(benchmark::State& state, Backend kind, std::size_t p,
                   std::size_t n) {
  const auto& stream = shell_stream(p, n);
  std::uint64_t comparisons = 0;
  std::size_t archived = 0;
  for (auto _ : state) {
    ComparisonCounter counter;
    auto archive = pareto::make_archive(kind, counter);
    for (const auto& y : stream.points) archive->update(y);
    benchmark::DoNotOptimize(archive->size());
    comparisons = counter.count;
    archived = archive->size();
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
  state.counters["cmp_per_insert"] = double(comparisons) / double(n);
  state.counters["archive"] = double(archived);
}

void sort_population(benchmark::State& state, Backend kind, std::size_t p) {
  const auto& stream = shell_stream(p, 5000);
  std::size_t fronts = 0;
  for (auto _ : state) {
    ComparisonCounter counter;
    auto result = pareto::nd_sort(stream.points, kind, counter);
    benchmark::DoNotOptimize(result.fronts.size());
    fronts = result.fronts.size();
  }
  state.counters["fronts"] = double(fronts);
}

}  // namespace

BENCHMARK_CAPTURE(replay_stream, list_p3, Backend::LinearList, 3, 10000)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(replay_stream, ndtree_p3, Backend::NdTree, 3, 10000)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(replay_stream, quadtree_p3, Backend::QuadTree, 3, 10000)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(replay_stream, mfront2_p3, Backend::MFront2, 3, 10000)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(replay_stream, sortedlist_p2, Backend::SortedList, 2, 10000)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(replay_stream, list_p10, Backend::LinearList, 10, 10000)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(replay_stream, ndtree_p10, Backend::NdTree, 10, 10000)
    ->Unit(benchmark::kMillisecond);

BENCHMARK_CAPTURE(sort_population, ndtree_p2, Backend::NdTree, 2)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(sort_population, ndtree_p5, Backend::NdTree, 5)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(sort_population, mfront2_p5, Backend::MFront2, 5)
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
