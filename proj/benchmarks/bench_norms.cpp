#include "multlab/central.hpp"
#include "multlab/convolution.hpp"
#include "multlab/idempotent.hpp"
#include "multlab/random.hpp"
#include "multlab/schur.hpp"

#include <benchmark/benchmark.h>

using namespace multlab;

namespace {

void BM_SchurNorm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  CounterRng rng(1);
  const schur::ScalarMultiplier phi(rng.complex_matrix(n, n));
  for (auto _ : state) benchmark::DoNotOptimize(schur::norm(phi));
}
BENCHMARK(BM_SchurNorm)->Arg(2)->Arg(4)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

// Presolve splits block-diagonal inputs into independent SDPs.
void BM_SchurNormBlocks(benchmark::State& state) {
  const bool presolve = state.range(0) != 0;
  CounterRng rng(2);
  Matrix m = Matrix::Zero(16, 16);
  for (int b = 0; b < 4; ++b) m.block(4 * b, 4 * b, 4, 4) = rng.complex_matrix(4, 4);
  const schur::ScalarMultiplier phi(m);
  schur::NormOptions o;
  o.presolve = presolve;
  for (auto _ : state) benchmark::DoNotOptimize(schur::norm(phi, o));
}
BENCHMARK(BM_SchurNormBlocks)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_CentralNorm(benchmark::State& state) {
  const int z = static_cast<int>(state.range(0));
  CounterRng rng(3);
  std::vector<Matrix> slices;
  for (int k = 0; k < z; ++k) slices.push_back(rng.complex_matrix(5, 5));
  const central::CentralMultiplier phi(std::move(slices));
  for (auto _ : state) benchmark::DoNotOptimize(central::central_norm(phi).value);
}
BENCHMARK(BM_CentralNorm)->Arg(1)->Arg(4)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_ConvNormAbelian(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  CounterRng rng(4);
  const convolution::AdmissiblePair psi(groups::cyclic(n), rng.complex_matrix(n, n));
  for (auto _ : state) benchmark::DoNotOptimize(convolution::conv_norm_abelian(psi).sdp);
}
BENCHMARK(BM_ConvNormAbelian)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_ThetaNorm(benchmark::State& state) {
  CounterRng rng(5);
  const groups::FiniteGroup g = groups::dihedral(4);
  const convolution::Measure mu(g, rng.complex_vector(g.order()));
  for (auto _ : state) benchmark::DoNotOptimize(convolution::theta_norm(mu));
}
BENCHMARK(BM_ThetaNorm);

void BM_ThreeOfFour(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  CounterRng rng(6);
  idempotent::Pattern e(n, n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (rng.coin()) e.set(x, y);
  for (auto _ : state) benchmark::DoNotOptimize(idempotent::three_of_four(e).holds);
}
BENCHMARK(BM_ThreeOfFour)->Arg(8)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
