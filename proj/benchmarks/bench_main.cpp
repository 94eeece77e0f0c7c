#include <benchmark/benchmark.h>

#include <random>

#include "layercake/abelian.hpp"
#include "layercake/catalog.hpp"
#include "layercake/cohomology.hpp"
#include "layercake/fincat.hpp"
#include "layercake/grothendieck.hpp"
#include "layercake/schreier.hpp"
#include "layercake/twogroup.hpp"

namespace {

using namespace layercake;

IntMatrix random_matrix(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::vector<std::int64_t>> rows(n, std::vector<std::int64_t>(n));
  for (auto& row : rows)
    for (auto& x : row) x = static_cast<std::int64_t>(rng() % 21) - 10;
  return IntMatrix::from_rows(rows, n);
}

void BM_SmithNormalForm(benchmark::State& state) {
  auto m = random_matrix(static_cast<std::size_t>(state.range(0)), 42);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_Cohomology(benchmark::State& state) {
  GModule m = GModule::trivial(FinGroup::cyclic(static_cast<std::size_t>(state.range(0))), FinAbGroup::cyclic(2));
  const auto degree = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(cohomology(m, degree));
}
BENCHMARK(BM_Cohomology)->Args({2, 3})->Args({3, 3})->Args({4, 3})->Args({4, 4});

void BM_PentagonCheck(benchmark::State& state) {
  GModule m = GModule::trivial(FinGroup::cyclic(static_cast<std::size_t>(state.range(0))), FinAbGroup::cyclic(2));
  auto t = build_from_data({m, Cochain::zero(m, 3)});
  for (auto _ : state) benchmark::DoNotOptimize(check_pentagon(t));
}
BENCHMARK(BM_PentagonCheck)->Arg(2)->Arg(4)->Arg(6);

void BM_Equivalence(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto c = catalog::codiscrete_category(n);
  auto d = catalog::terminal_category();
  for (auto _ : state) benchmark::DoNotOptimize(are_equivalent(c, d));
}
BENCHMARK(BM_Equivalence)->Arg(2)->Arg(4)->Arg(6);

void BM_GrothendieckConstruct(benchmark::State& state) {
  auto base = catalog::chain_category(static_cast<std::size_t>(state.range(0)));
  SetValuedFunctor f = SetValuedFunctor::point(base);
  for (auto _ : state) benchmark::DoNotOptimize(grothendieck_construct(f));
}
BENCHMARK(BM_GrothendieckConstruct)->Arg(2)->Arg(4)->Arg(8);

void BM_ExtensionEquivalence(benchmark::State& state) {
  auto ext = extension_from_normal_subgroup(FinGroup::quaternion(), {0, 1});
  auto rebuilt = build_extension(extract_cocycle(ext, choose_section(ext)));
  for (auto _ : state) benchmark::DoNotOptimize(extensions_equivalent(ext, rebuilt));
}
BENCHMARK(BM_ExtensionEquivalence);

}  // namespace

BENCHMARK_MAIN();
