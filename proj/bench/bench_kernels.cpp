// Serial reference vs OpenMP kernels. Arg 0 = serial, 1 = parallel.

#include <benchmark/benchmark.h>

#include "conlap/constructions.hpp"
#include "conlap/functionals.hpp"
#include "conlap/kernels.hpp"
#include "conlap/linalg.hpp"
#include "conlap/search.hpp"

using namespace conlap;

namespace {

Exec mode(const benchmark::State& s) { return s.range(0) ? Exec::parallel : Exec::serial; }

const IntMatrix& laplacian() {
  // a few hundred faces
  static const IntMatrix l = connection_laplacian(whitney_complex(gen::erdos_renyi(20, Rational(1, 2), 3)));
  return l;
}

void BM_Determinant(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(kernels::bareiss_determinant(laplacian(), mode(s)));
  s.counters["n"] = static_cast<double>(laplacian().rows());
}

void BM_GreenFunction(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(unimodular_inverse(laplacian(), mode(s)));
}

void BM_Rank(benchmark::State& s) {
  static const IntMatrix h = hodge_laplacian(whitney_complex(gen::erdos_renyi(18, Rational(1, 2), 5)));
  for (auto _ : s) benchmark::DoNotOptimize(rank(h, mode(s)));
}

void BM_CliqueCount(benchmark::State& s) {
  static const Graph g = gen::erdos_renyi(60, Rational(1, 2), 8);
  for (auto _ : s) benchmark::DoNotOptimize(clique_f_vector(g, mode(s)));
}

void BM_Enumerate7(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(enumerate_graphs(7, mode(s)));
}

void BM_MonteCarlo(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(monte_carlo_chi(10, Rational(1, 2), 2000, 1, mode(s)));
}

}  // namespace

BENCHMARK(BM_Determinant)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GreenFunction)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Rank)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CliqueCount)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Enumerate7)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MonteCarlo)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
