#include <benchmark/benchmark.h>

#include "betticone/koszul.hpp"
#include "betticone/monomial_ideal.hpp"
#include "betticone/pairing.hpp"
#include "betticone/supernatural.hpp"

namespace {

using namespace betticone;

const BettiTable& sample_table() {
  static const BettiTable table =
      koszul_betti_table(random_ideal(9042, 4, 6, 5));
  return table;
}

void BM_TruncatedPairingDirect(benchmark::State& state) {
  const SupernaturalTable sheaf({3, 0, -4});
  const TruncationSpec spec{2, 3};
  for (auto _ : state) {
    benchmark::DoNotOptimize(truncated_pairing(sample_table(), sheaf, spec));
  }
}
BENCHMARK(BM_TruncatedPairingDirect);

void BM_TruncatedPairingSweep(benchmark::State& state) {
  const SupernaturalTable sheaf({3, 0, -4});
  const BettiTable& table = sample_table();
  for (auto _ : state) {
    const PairingProfile profile(table, sheaf);
    Rational sum = 0;
    for (int tau = 0; tau <= 4; ++tau) {
      for (std::int64_t kappa = -2; kappa <= 12; ++kappa) {
        sum += profile.truncated(TruncationSpec{tau, kappa});
      }
    }
    benchmark::DoNotOptimize(sum);
  }
}
BENCHMARK(BM_TruncatedPairingSweep);

}  // namespace
