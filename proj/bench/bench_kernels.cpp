// Serial reference vs OpenMP constraint assembly, and the full Leibniz solve.

#include <benchmark/benchmark.h>

#include "derlab/dersolve.hpp"
#include "derlab/kernels.hpp"

namespace {

derlab::ModuleSpec spec_for(int64_t id) {
  switch (id) {
    case 0: return derlab::ModuleSpec({2, 3});
    case 1: return derlab::ModuleSpec({2, 2, 2});
    case 2: return derlab::ModuleSpec({3, 3});
    default: return derlab::ModuleSpec({4, 3});
  }
}

template <derlab::CMatrix (*Kernel)(const derlab::ConcreteAlgebra&)>
void BM_Kernel(benchmark::State& state) {
  const auto alg = derlab::structure_constants(spec_for(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(alg));
  state.counters["D"] = alg.dim();
}

void BM_LeibnizSolve(benchmark::State& state) {
  const auto alg = derlab::structure_constants(spec_for(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(derlab::leibniz_nullspace(alg));
}

}  // namespace

BENCHMARK(BM_Kernel<derlab::kernels::leibniz_constraints_serial>)->DenseRange(0, 3);
BENCHMARK(BM_Kernel<derlab::kernels::leibniz_constraints>)->DenseRange(0, 3);
BENCHMARK(BM_Kernel<derlab::kernels::jordan_constraints_serial>)->DenseRange(0, 3);
BENCHMARK(BM_Kernel<derlab::kernels::jordan_constraints>)->DenseRange(0, 3);
BENCHMARK(BM_Kernel<derlab::kernels::commutant_constraints_serial>)->DenseRange(0, 3);
BENCHMARK(BM_Kernel<derlab::kernels::commutant_constraints>)->DenseRange(0, 3);
BENCHMARK(BM_LeibnizSolve)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
