#include <benchmark/benchmark.h>

#include "symcoh/darboux.hpp"
#include "symcoh/torus.hpp"

using namespace symcoh;

namespace {

void BM_PoissonPolynomial(benchmark::State& state) {
  const DarbouxChart chart(static_cast<int>(state.range(0)));
  Rng rng(3);
  const Polynomial f = random_polynomial(rng, chart.dimension());
  const Polynomial g = random_polynomial(rng, chart.dimension());
  for (auto _ : state) benchmark::DoNotOptimize(poisson(chart, f, g));
}
BENCHMARK(BM_PoissonPolynomial)->Arg(1)->Arg(2);

void BM_PoissonTrig(benchmark::State& state) {
  const Torus t(static_cast<int>(state.range(0)));
  TorusRng rng(4);
  const TrigFunction f = random_trig(rng, t.dimension());
  const TrigFunction g = random_trig(rng, t.dimension());
  for (auto _ : state) benchmark::DoNotOptimize(tbracket(t, f, g));
}
BENCHMARK(BM_PoissonTrig)->Arg(1)->Arg(2);

void BM_Identity(benchmark::State& state) {
  const DarbouxChart chart(2);
  const Identity id = kAllIdentities[state.range(0)];
  state.SetLabel(std::string(identity_name(id)));
  Rng rng(5);
  for (auto _ : state) benchmark::DoNotOptimize(verify_identity(chart, id, rng));
}
BENCHMARK(BM_Identity)->DenseRange(0, 8);

}  // namespace

BENCHMARK_MAIN();
