#include <benchmark/benchmark.h>

#include "atgp/generator.hpp"
#include "atgp/oracle.hpp"
#include "atgp/solver.hpp"

namespace {

atgp::Instance make_instance(std::int64_t n) {
  return atgp::generate(static_cast<std::size_t>(n), 1, atgp::TerrainProfile::kRandomWalk);
}

void BM_Preprocess(benchmark::State& state) {
  atgp::Instance inst = make_instance(state.range(0));
  for (auto _ : state) {
    atgp::MarkSet marks = atgp::marks_convex_hull(inst.terrain);
    auto events = atgp::edge_events(inst.terrain, inst.altitude, marks);
    benchmark::DoNotOptimize(events);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Preprocess)->RangeMultiplier(2)->Range(250, 4000)->Complexity()
    ->Unit(benchmark::kMillisecond);

void BM_Solve(benchmark::State& state) {
  atgp::Instance inst = make_instance(state.range(0));
  for (auto _ : state) {
    atgp::Solution sol = atgp::solve(inst.terrain, inst.altitude);
    benchmark::DoNotOptimize(sol);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Solve)->RangeMultiplier(2)->Range(250, 4000)->Complexity()
    ->Unit(benchmark::kMillisecond);

void BM_SolveAndCertify(benchmark::State& state) {
  atgp::Instance inst = make_instance(state.range(0));
  for (auto _ : state) {
    atgp::Solution sol = atgp::solve(inst.terrain, inst.altitude);
    atgp::Certificate cert = atgp::certify(sol, inst.terrain, inst.altitude);
    benchmark::DoNotOptimize(cert);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SolveAndCertify)->RangeMultiplier(2)->Range(250, 2000)->Complexity()
    ->Unit(benchmark::kMillisecond);

void BM_VisibilityInterval(benchmark::State& state) {
  atgp::Instance inst = make_instance(state.range(0));
  std::size_t i = 0;
  for (auto _ : state) {
    const atgp::Point& v = inst.terrain.vertex(i++ % inst.terrain.vertex_count());
    benchmark::DoNotOptimize(atgp::visibility_interval(v, inst.terrain, inst.altitude));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_VisibilityInterval)->RangeMultiplier(4)->Range(250, 4000)->Complexity();

}  // namespace

BENCHMARK_MAIN();
