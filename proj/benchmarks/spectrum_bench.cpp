#include <benchmark/benchmark.h>

#include "eigendeg/generators.hpp"
#include "eigendeg/spectrum.hpp"
#include "eigendeg/sym_matrix.hpp"

namespace {

void BM_AdjacencySpectrum(benchmark::State& state) {
  const auto n = static_cast<int>(state.range(0));
  const eigendeg::SymMatrix a = eigendeg::adjacency_matrix(eigendeg::gen_gnp(n, 0.5, 42));
  for (auto _ : state) {
    benchmark::DoNotOptimize(eigendeg::sym_eigenvalues(a));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_AdjacencySpectrum)->RangeMultiplier(2)->Range(32, 256)->Complexity();

void BM_LaplacianSpectrum(benchmark::State& state) {
  const auto n = static_cast<int>(state.range(0));
  const eigendeg::Graph g = eigendeg::gen_gnp(n, 0.5, 42);
  for (auto _ : state) {
    benchmark::DoNotOptimize(eigendeg::laplacian_spectrum(g));
  }
}
BENCHMARK(BM_LaplacianSpectrum)->Arg(64)->Arg(128);

}  // namespace
