#include <benchmark/benchmark.h>

#include "betticone/koszul.hpp"
#include "betticone/monomial_ideal.hpp"

namespace {

using namespace betticone;

void BM_KoszulBettiTable(benchmark::State& state) {
  const MonomialIdeal ideal = parse_monomial_ideal(
      "x^2,x*y,x*z^2,y^3*w,z^2*w^2", {"x", "y", "z", "w"});
  KoszulOptions options;
  options.threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(koszul_betti_table(ideal, options));
  }
}
BENCHMARK(BM_KoszulBettiTable)->Arg(1)->Arg(4);

void BM_StandardMonomialCount(benchmark::State& state) {
  const MonomialIdeal ideal = parse_monomial_ideal(
      "x^2,x*y,x*z^2,y^3*w,z^2*w^2", {"x", "y", "z", "w"});
  for (auto _ : state) {
    benchmark::DoNotOptimize(standard_monomial_count(ideal, state.range(0)));
  }
}
BENCHMARK(BM_StandardMonomialCount)->Arg(8)->Arg(16);

}  // namespace
