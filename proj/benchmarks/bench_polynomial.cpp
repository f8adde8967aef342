#include <benchmark/benchmark.h>

#include "apoly/parse.hpp"
#include "apoly/polynomial.hpp"

namespace {

using apoly::LaurentPolynomial;

LaurentPolynomial dense_bivariate(int degree) {
  LaurentPolynomial f;
  for (int i = 0; i <= degree; ++i)
    for (int j = 0; j <= degree; ++j)
      f += LaurentPolynomial::monomial(i * 7 + j * 3 + 1, apoly::Monomial{{"x", i}, {"y", j}});
  return f;
}

void BM_MultiplyDense(benchmark::State& state) {
  const auto f = dense_bivariate(static_cast<int>(state.range(0)));
  const auto g = dense_bivariate(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(f * g);
  state.SetComplexityN(static_cast<benchmark::IterationCount>(f.term_count()));
}
BENCHMARK(BM_MultiplyDense)->RangeMultiplier(2)->Range(4, 32)->Complexity();

void BM_DivideExact(benchmark::State& state) {
  const auto g = dense_bivariate(static_cast<int>(state.range(0)));
  const auto q = dense_bivariate(static_cast<int>(state.range(0)));
  const auto f = g * q;
  for (auto _ : state) benchmark::DoNotOptimize(apoly::divide_exact(f, g));
}
BENCHMARK(BM_DivideExact)->RangeMultiplier(2)->Range(4, 16);

void BM_Parse(benchmark::State& state) {
  const auto text = dense_bivariate(static_cast<int>(state.range(0))).to_string();
  for (auto _ : state) benchmark::DoNotOptimize(apoly::parse_poly(text));
  state.SetBytesProcessed(state.iterations() * static_cast<int64_t>(text.size()));
}
BENCHMARK(BM_Parse)->Arg(8)->Arg(32);

}  // namespace
