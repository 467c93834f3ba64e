#include <benchmark/benchmark.h>

#include "betticone/decomposition.hpp"
#include "betticone/koszul.hpp"
#include "betticone/monomial_ideal.hpp"

namespace {

using namespace betticone;

void BM_DecomposeOracleTable(benchmark::State& state) {
  const MonomialIdeal ideal =
      random_ideal(static_cast<std::uint64_t>(state.range(0)), 4, 6, 5);
  const BettiTable table = koszul_betti_table(ideal);
  for (auto _ : state) {
    benchmark::DoNotOptimize(decompose(table));
  }
}
BENCHMARK(BM_DecomposeOracleTable)->Arg(9001)->Arg(9014)->Arg(9111);

void BM_PureDiagram(benchmark::State& state) {
  const DegreeSequence type({-6, -2, 1, 4, 7, 11});
  for (auto _ : state) {
    benchmark::DoNotOptimize(pure_diagram(type, 6));
  }
}
BENCHMARK(BM_PureDiagram);

}  // namespace
