#include <benchmark/benchmark.h>

#include "qborel/decomp.hpp"
#include "qborel/resolution.hpp"

using namespace qborel;

namespace {

void BM_ClosureChain(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Poset chain = Poset::chain(n);
  Monomial top = Monomial::var(n, n - 1, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(q_closure(chain, {top}));
  }
}
BENCHMARK(BM_ClosureChain)->Arg(4)->Arg(5)->Arg(6);

void BM_Intersect(benchmark::State& state) {
  const int n = 5;
  MonomialPrime full(n, (VarMask{1} << n) - 1);
  MonomialIdeal a = prime_power(full, static_cast<Exponent>(state.range(0)));
  MonomialIdeal b = prime_power(MonomialPrime(n, 0b01011), 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(intersect(a, b));
  }
}
BENCHMARK(BM_Intersect)->Arg(3)->Arg(5);

void BM_KoszulBetti(benchmark::State& state) {
  Poset chain = Poset::chain(static_cast<int>(state.range(0)));
  Monomial m = Monomial::var(chain.size(), chain.size() - 1, 2);
  MonomialIdeal ideal = q_closure(chain, {m});
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        koszul_betti(ideal, ideal.max_gen_degree() + chain.size()));
  }
}
BENCHMARK(BM_KoszulBetti)->Arg(3)->Arg(4)->Arg(5);

void BM_EkResolution(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Poset chain = Poset::chain(n);
  std::vector<Exponent> e(n, 0);
  e[n - 1] = 2;
  e[n - 2] = 1;
  MonomialIdeal ideal = q_closure(chain, {Monomial{e}});
  for (auto _ : state) {
    benchmark::DoNotOptimize(ek_resolution(ideal));
  }
}
BENCHMARK(BM_EkResolution)->Arg(4)->Arg(5);

void BM_YResolutionVerify(benchmark::State& state) {
  const int t = static_cast<int>(state.range(0));
  Poset y = Poset::y_poset(t);
  std::vector<Exponent> e(t + 2, 0);
  e[t] = 1;
  e[t + 1] = 1;
  MonomialIdeal ideal = q_closure(y, {Monomial{e}});
  for (auto _ : state) {
    FreeComplex f = y_resolution(t, ideal);
    benchmark::DoNotOptimize(verify_exactness(f, ideal.max_gen_degree() + 3));
  }
}
BENCHMARK(BM_YResolutionVerify)->Arg(1)->Arg(2);

void BM_PrimaryDecomposition(benchmark::State& state) {
  Poset q = Poset::build(6, {{0, 3}, {3, 5}, {2, 5}, {1, 4}, {2, 4}});
  Monomial def{std::vector<Exponent>{0, 0, 0, 1, 1, 1}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(principal_primary_decomposition(q, def));
  }
}
BENCHMARK(BM_PrimaryDecomposition);

}  // namespace

BENCHMARK_MAIN();
