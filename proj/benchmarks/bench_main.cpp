#include <benchmark/benchmark.h>

#include <random>

#include "signpat/cyclic.hpp"
#include "signpat/idem_builder.hpp"
#include "signpat/kpotent_builder.hpp"
#include "signpat/oracle.hpp"
#include "signpat/realization.hpp"
#include "signpat/reduction.hpp"

using namespace signpat;

namespace {

SignMatrix random_proper(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  SignMatrix m(n);
  const Sign vals[3] = {Sign::Zero, Sign::Plus, Sign::Minus};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.set(i, j, vals[rng() % 3]);
  return m;
}

void BM_MatMul(benchmark::State& state) {
  const int n = int(state.range(0));
  const SignMatrix a = random_proper(n, 1), b = random_proper(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(mat_mul(a, b));
}
BENCHMARK(BM_MatMul)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_PotenceCycle(benchmark::State& state) {
  const SignMatrix q = q_cycle(int(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(potence_index(q));
}
BENCHMARK(BM_PotenceCycle)->Arg(4)->Arg(8);

void BM_GenerateIdempotent(benchmark::State& state) {
  const DiagSpec spec = parse_diag_spec("+0+++");
  for (auto _ : state) {
    long long count = 0;
    generate_idempotent(spec, [&](const SignMatrix&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_GenerateIdempotent);

void BM_GenerateKPotent(benchmark::State& state) {
  const KDiagSpec spec = parse_block_spec("P2,0,P2,Q1");
  for (auto _ : state) {
    long long count = 0;
    generate_kpotent(spec, Strategy::SinglePass,
                     [&](const SignMatrix&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_GenerateKPotent);

void BM_EnumerateFull3(benchmark::State& state) {
  EnumSpec spec;
  spec.n = 3;
  spec.shape = EnumSpec::Shape::Full;
  spec.predicate = EnumSpec::Predicate::Idempotent;
  for (auto _ : state) {
    long long count = 0;
    enumerate(spec, [&](const SignMatrix&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_EnumerateFull3);

void BM_CanonicalForm(benchmark::State& state) {
  const SignMatrix a = random_proper(int(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(a));
}
BENCHMARK(BM_CanonicalForm)->Arg(4)->Arg(5);

void BM_Realization(benchmark::State& state) {
  // expanded plus cycle with classes (3,2,1) next to a zero block
  SignMatrix red(4);
  red.set(0, 1, Sign::Plus);
  red.set(1, 2, Sign::Plus);
  red.set(2, 0, Sign::Plus);
  red.set(0, 3, Sign::Plus);
  const SignMatrix a = expand(red, std::vector<int>{3, 2, 1, 1});
  const CnfOutcome cnf = to_cyclic_normal_form(a);
  for (auto _ : state)
    benchmark::DoNotOptimize(build_realization(a, *cnf.cnf));
}
BENCHMARK(BM_Realization);

}  // namespace

BENCHMARK_MAIN();
