#include <benchmark/benchmark.h>

#include "twistzhu/delta.hpp"
#include "twistzhu/iso.hpp"

using namespace twistzhu;

namespace {

void BM_ModeAction(benchmark::State& state) {
  const auto& h = heisenberg();
  const int w = static_cast<int>(state.range(0));
  const auto basis = fock_basis(w);
  const Vector u(basis.front()), v(basis.back());
  // a fresh model each round would defeat the memo; this measures the warm path
  for (auto _ : state)
    for (long n = -2; n <= 2 * w; ++n) benchmark::DoNotOptimize(h.mode_action(u, n, v));
}
BENCHMARK(BM_ModeAction)->DenseRange(1, 5);

void BM_SolveAj(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(solve_aj(3, order));
}
BENCHMARK(BM_SolveAj)->Arg(6)->Arg(12)->Arg(24);

void BM_CircChain(benchmark::State& state) {
  const auto& h = heisenberg();
  const int k = static_cast<int>(state.range(0));
  const auto t = solve_aj(k, 8);
  const Vector u(fock_basis(3).front()), v(fock_basis(3).back());
  for (auto _ : state) benchmark::DoNotOptimize(verify_circ_chain(h, u, v, t));
}
BENCHMARK(BM_CircChain)->Arg(2)->Arg(3)->Arg(5);

void BM_StarChain(benchmark::State& state) {
  const auto& h = heisenberg();
  const int k = static_cast<int>(state.range(0));
  const auto t = solve_aj(k, 8);
  const Vector u(fock_basis(3).front()), v(fock_basis(3).back());
  for (auto _ : state) benchmark::DoNotOptimize(verify_star_chain(h, u, v, t));
}
BENCHMARK(BM_StarChain)->Arg(2)->Arg(3)->Arg(5);

void BM_CycloMultiply(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  CycloScalar a = CycloScalar(Scalar(0)).promoted(k), b = a;
  for (int e = 0; e < k; ++e) {
    a += eta_power(k, e) * CycloScalar(Scalar(e + 1, 3));
    b += eta_power(k, 2 * e) * CycloScalar(Scalar(1, e + 2));
  }
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_CycloMultiply)->Arg(3)->Arg(7)->Arg(12)->Arg(30);

}  // namespace

BENCHMARK_MAIN();
