#include <benchmark/benchmark.h>

#include <vector>

#include "apoly/amalgam.hpp"
#include "apoly/elimination.hpp"
#include "apoly/newton.hpp"
#include "apoly/numeric.hpp"

namespace {

void BM_ResultantChain(benchmark::State& state) {
  const auto params = apoly::AmalgamParams::defaults(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(apoly::resultant_chain(params));
}
BENCHMARK(BM_ResultantChain)->DenseRange(1, 6)->Unit(benchmark::kMillisecond);

void BM_EliminateP(benchmark::State& state) {
  const auto n = state.range(0);
  const auto f = apoly::glue_substitution(apoly::AmalgamParams::defaults(n));
  for (auto _ : state) benchmark::DoNotOptimize(apoly::eliminate_p(f, n));
}
BENCHMARK(BM_EliminateP)->DenseRange(1, 6)->Unit(benchmark::kMillisecond);

void BM_EdgePolynomials(benchmark::State& state) {
  const auto f = apoly::figure_eight_apolynomial();
  for (auto _ : state) {
    for (const auto& e : apoly::edges(apoly::newton_polygon(f, "L", "M")))
      benchmark::DoNotOptimize(
          apoly::edge_polynomial_substitution(f, e, apoly::basis_change_for_edge(e)));
  }
}
BENCHMARK(BM_EdgePolynomials);

void BM_RootsOfUnity(benchmark::State& state) {
  std::vector<double> a(static_cast<std::size_t>(state.range(0)) + 1, 0.0);
  a.front() = -1.0;
  a.back() = 1.0;
  for (auto _ : state) benchmark::DoNotOptimize(apoly::roots_dense(a));
}
BENCHMARK(BM_RootsOfUnity)->RangeMultiplier(4)->Range(4, 256);

void BM_ConvergenceTrace(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(apoly::convergence_trace(5, 1e-2, 0.1, 4));
}
BENCHMARK(BM_ConvergenceTrace)->Unit(benchmark::kMillisecond);

}  // namespace
