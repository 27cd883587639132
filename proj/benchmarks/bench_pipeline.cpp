#include <benchmark/benchmark.h>

#include "curvetopo/crossings.hpp"
#include "curvetopo/curvegen.hpp"
#include "curvetopo/moves.hpp"
#include "curvetopo/rotation.hpp"

using namespace curvetopo;

namespace {

// Arguments: Fourier order, samples per curve.
void BM_FindCrossings(benchmark::State& state) {
  const ClosedPolyline c = random_generic_curve(static_cast<int>(state.range(0)), 1,
                                                static_cast<int>(state.range(1)));
  const Tolerances tol = default_tolerances(c);
  for (auto _ : state) benchmark::DoNotOptimize(find_crossings(c, tol));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(c.size()));
}
BENCHMARK(BM_FindCrossings)->ArgsProduct({{2, 6}, {256, 1024, 4096, 16384}});

void BM_Analyze(benchmark::State& state) {
  const ClosedPolyline c = random_generic_curve(static_cast<int>(state.range(0)), 2,
                                                static_cast<int>(state.range(1)));
  const Tolerances tol = default_tolerances(c);
  for (auto _ : state) benchmark::DoNotOptimize(analyze(c, tol));
}
BENCHMARK(BM_Analyze)->ArgsProduct({{2, 6}, {512, 4096}});

void BM_WindPoint(benchmark::State& state) {
  const ClosedPolyline c = named_curve("paper_example", static_cast<int>(state.range(0)));
  const Tolerances tol = default_tolerances(c);
  for (auto _ : state) benchmark::DoNotOptimize(wind_point(c, {0.1, 0.05}, tol));
}
BENCHMARK(BM_WindPoint)->Arg(512)->Arg(8192);

// Every site of every move kind on a grown diagram.
void BM_AllMoves(benchmark::State& state) {
  const ClosedPolyline c = random_generic_curve(6, 3, 512);
  Diagram d = analyze_full(c, default_tolerances(c)).diagram;
  for (int k = 0; k < state.range(0); ++k) {
    const RegionLabeling labels = alexander_numbering(d);
    const auto sites = find_move_sites(d, labels, {MoveType::M1b, MoveDirection::Forward});
    d = apply_move(d, labels, sites[sites.size() / 2]).diagram;
  }
  const RegionLabeling labels = alexander_numbering(d);
  for (auto _ : state) {
    for (MoveType t : {MoveType::M1a, MoveType::M1b, MoveType::M2a, MoveType::M3a}) {
      for (MoveDirection dir : {MoveDirection::Forward, MoveDirection::Backward}) {
        for (const MoveSite& site : find_move_sites(d, labels, {t, dir})) {
          benchmark::DoNotOptimize(apply_move(d, labels, site));
        }
      }
    }
  }
  state.counters["crossings"] = d.crossing_count();
}
BENCHMARK(BM_AllMoves)->Arg(0)->Arg(8)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
