// Serial reference vs OpenMP for the hot kernels. Run with --benchmark_filter.

#include <random>

#include <benchmark/benchmark.h>

#include "liesurf/kernels.hpp"
#include "liesurf/projections.hpp"
#include "liesurf/properness.hpp"

using namespace liesurf;

namespace {

Exec exec_of(const benchmark::State& s) { return s.range(0) ? Exec::parallel : Exec::serial; }

void BM_AdjointMatrix(benchmark::State& state) {
  Algebra alg = make_sl(static_cast<int>(state.range(1)));
  std::mt19937_64 rng(7);
  CMatrix X = random_algebra_element(*alg, rng);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::adjoint_matrix(*alg, X, exec_of(state)));
}

void BM_FirstWeylIntoKernel(benchmark::State& state) {
  Algebra alg = make_sl(static_cast<int>(state.range(1)));
  Torus torus = split_torus(alg);
  // A strictly dominant point is never in W.span(e): forces a full scan.
  const int n = torus->coord_count;
  QMatrix basis;
  QVector e(n, 0);
  e[0] = 1;
  e[1] = 1;
  e[n - 1] = -2;
  basis.push_back(e);
  HSubalgebraTorus ah(torus, basis);
  QVector v = torus->strictly_dominant_point();
  std::vector<std::vector<mpz_class>> vs{primitive_integer_vector(v)};
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::first_weyl_into_kernel(torus->weyl, vs, ah.annihilators(), exec_of(state)));
}

void BM_MinOrbitDistance(benchmark::State& state) {
  Algebra alg = make_su(static_cast<int>(state.range(1)), static_cast<int>(state.range(1)));
  Torus torus = split_torus(alg);
  const int m = torus->coord_count;
  std::mt19937_64 rng(11);
  std::normal_distribution<double> nd;
  RMatrix S(m, 256);
  for (int i = 0; i < S.size(); ++i) S.data()[i] = nd(rng);
  RMatrix P = RMatrix::Identity(m, m);
  P(0, 0) = 0;
  for (auto _ : state) benchmark::DoNotOptimize(kernels::min_orbit_distance(torus->weyl, S, P, exec_of(state)));
}

}  // namespace

BENCHMARK(BM_AdjointMatrix)->ArgsProduct({{0, 1}, {4, 6, 8}})->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_FirstWeylIntoKernel)->ArgsProduct({{0, 1}, {6, 7, 8}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MinOrbitDistance)->ArgsProduct({{0, 1}, {4, 5}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
