#include <benchmark/benchmark.h>

#include <random>

#include "symcoh/ce_model.hpp"
#include "symcoh/symplectic.hpp"

using namespace symcoh;

namespace {

RForm dense_form(int g, int k, std::mt19937_64& rng) {
  RForm out(g);
  for (const auto& idx : basis_of_degree(g, k)) out.add_term(idx, Rational(static_cast<long>(rng() % 7) - 3));
  return out;
}

void BM_Wedge(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  std::mt19937_64 rng(1);
  const RForm a = dense_form(g, 2, rng);
  const RForm b = dense_form(g, 2, rng);
  for (auto _ : state) benchmark::DoNotOptimize(wedge(a, b));
}
BENCHMARK(BM_Wedge)->Arg(4)->Arg(6)->Arg(8);

void BM_HodgeStar(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  RForm omega(2 * n);
  for (int i = 0; i < n; ++i) omega.add_term(MultiIndex::of({i, n + i}), Rational(1));
  const SymplecticContext ctx(omega);
  std::mt19937_64 rng(2);
  const RForm a = dense_form(2 * n, n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(hodge_star(ctx, a));
}
BENCHMARK(BM_HodgeStar)->Arg(1)->Arg(2)->Arg(3);

void BM_BettiThurston(benchmark::State& state) {
  const CEModel m = thurston_model();
  for (auto _ : state) benchmark::DoNotOptimize(betti_numbers(m));
}
BENCHMARK(BM_BettiThurston);

void BM_BettiTorus6(benchmark::State& state) {
  const CEModel m = torus_model(3);
  for (auto _ : state) benchmark::DoNotOptimize(betti_numbers(m));
}
BENCHMARK(BM_BettiTorus6);

}  // namespace
