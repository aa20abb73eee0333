#include <benchmark/benchmark.h>

#include <string>

#include "gj2d/covering_graph.hpp"
#include "gj2d/delta_complex.hpp"
#include "gj2d/extremality.hpp"
#include "gj2d/minimality.hpp"
#include "json_io.hpp"

using namespace gj2d;

namespace {

PwlFunction load(const std::string& name) { return io::load_function(std::string(GJ2D_FIXTURES) + "/" + name + ".json"); }

void BM_CheckMinimal(benchmark::State& state) {
  const auto pi = refine(load("example_q5"), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_minimal(pi));
}
BENCHMARK(BM_CheckMinimal)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_AdditiveFaces(benchmark::State& state) {
  const auto pi = load("example_q5");
  for (auto _ : state) benchmark::DoNotOptimize(additive_faces(pi));
}
BENCHMARK(BM_AdditiveFaces)->Unit(benchmark::kMillisecond);

void BM_CoveredSets(benchmark::State& state) {
  const auto pi = load("example_q5");
  const auto additive = additive_faces(pi);
  for (auto _ : state) benchmark::DoNotOptimize(covered_sets(additive, pi.q()));
}
BENCHMARK(BM_CoveredSets)->Unit(benchmark::kMillisecond);

void BM_SystemKernel(benchmark::State& state) {
  const auto pi = load("gmic_q5");
  const auto sys = assemble_system(pi, 5 * static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(solution_space_dim(sys));
}
BENCHMARK(BM_SystemKernel)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_Decide(benchmark::State& state) {
  const auto pi = load(state.range(0) == 0 ? "gmic_q5" : "example_q5");
  for (auto _ : state) benchmark::DoNotOptimize(decide_extreme(pi, 3));
}
BENCHMARK(BM_Decide)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->Iterations(2);

}  // namespace

// The packaged benchmark_main archive carries LTO bytecode from another compiler.
BENCHMARK_MAIN();
