#include <benchmark/benchmark.h>

#include "stacky/character_table.hpp"
#include "stacky/random_inputs.hpp"
#include "stacky/stack_decomp.hpp"

using namespace stacky;

namespace {

void BM_Closure(benchmark::State& state) {
  const std::string name = "S" + std::to_string(state.range(0));
  const auto gens = verify::named_group(name).generators();
  for (auto _ : state) {
    auto g = groups::FiniteGroup::generate(gens.front().degree(), gens);
    benchmark::DoNotOptimize(g.order());
  }
}
BENCHMARK(BM_Closure)->DenseRange(4, 7);

void BM_ConjugacyClasses(benchmark::State& state) {
  const auto g = verify::named_group("S" + std::to_string(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(groups::conjugacy_classes(g).size());
}
BENCHMARK(BM_ConjugacyClasses)->DenseRange(4, 6);

void BM_CharacterTable(benchmark::State& state, const char* name) {
  const auto g = verify::named_group(name);
  for (auto _ : state) benchmark::DoNotOptimize(chars::character_table(g).size());
}
BENCHMARK_CAPTURE(BM_CharacterTable, S4, "S4");
BENCHMARK_CAPTURE(BM_CharacterTable, A5, "A5");
BENCHMARK_CAPTURE(BM_CharacterTable, S5, "S5");
BENCHMARK_CAPTURE(BM_CharacterTable, C12, "C12");

void BM_CyclotomicMultiply(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  chars::Cyclotomic a = 1, b = 1;
  for (long long k = 1; k < 6; ++k) {
    a += chars::Cyclotomic::zeta(n, k) * chars::Cyclotomic(k);
    b += chars::Cyclotomic::zeta(n, 2 * k + 1);
  }
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_CyclotomicMultiply)->Arg(3)->Arg(12)->Arg(60)->Arg(120);

void BM_MotiveChiQuotient(benchmark::State& state) {
  const auto cases = verify::random_suite(7, 20);
  const stack::ExecPolicy policy{state.range(0) != 0};
  for (auto _ : state)
    for (const auto& c : cases) benchmark::DoNotOptimize(stack::motive_chi_quotient(c.model, c.p, policy));
}
BENCHMARK(BM_MotiveChiQuotient)->Arg(0)->Arg(1);

void BM_MotiveChiBH(benchmark::State& state, const char* a, const char* b) {
  const auto g = groups::FiniteGroup::direct_product(verify::named_group(a), verify::named_group(b));
  for (auto _ : state) benchmark::DoNotOptimize(stack::motive_chi_BH(g, 0).motive);
}
BENCHMARK_CAPTURE(BM_MotiveChiBH, S3xC2, "S3", "C2");
BENCHMARK_CAPTURE(BM_MotiveChiBH, S4xS3, "S4", "S3");

}  // namespace

BENCHMARK_MAIN();
