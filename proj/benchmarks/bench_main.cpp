#include <benchmark/benchmark.h>

#include "jl/dsl.hpp"
#include "jl/jordan.hpp"
#include "jl/subgroups.hpp"

namespace {

jl::PermGroup group(const char* expr) { return jl::build(jl::parse_expr(expr)); }

void BM_ChainOrder(benchmark::State& state) {
  const char* exprs[] = {"S5", "(A5 * A5) : C2 [swap]", "PSL(2,7) * C2"};
  const char* e = exprs[state.range(0)];
  for (auto _ : state) benchmark::DoNotOptimize(group(e).order());
  state.SetLabel(e);
}
BENCHMARK(BM_ChainOrder)->DenseRange(0, 2);

void BM_LatticeS5(benchmark::State& state) {
  jl::PermGroup s5 = group("S5");
  for (auto _ : state) benchmark::DoNotOptimize(jl::all_subgroups(s5).size());
}
BENCHMARK(BM_LatticeS5)->Unit(benchmark::kMillisecond);

void BM_Analyze(benchmark::State& state) {
  const char* exprs[] = {"S5", "A6", "(A5 * A5) : C2 [swap]", "C2 * A7"};
  const char* e = exprs[state.range(0)];
  jl::PermGroup g = group(e);
  for (auto _ : state) benchmark::DoNotOptimize(jl::analyze(g).J.lower);
  state.SetLabel(e);
}
BENCHMARK(BM_Analyze)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_MaxAbelian(benchmark::State& state) {
  jl::PermGroup g = group(state.range(0) == 0 ? "S5" : "PSL(2,7) * C2");
  for (auto _ : state) benchmark::DoNotOptimize(jl::max_abelian_order(g));
}
BENCHMARK(BM_MaxAbelian)->DenseRange(0, 1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
