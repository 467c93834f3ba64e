#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "betticone/betti_table.hpp"
#include "betticone/supernatural.hpp"

namespace betticone {

// Cutoff data for a truncated pairing: homological position tau and
// internal-degree bound kappa. An absent kappa means no degree cutoff.
struct TruncationSpec {
  int tau = 0;
  std::optional<std::int64_t> kappa;
};

// <beta, gamma> = sum_{i >= j} (-1)^{i-j} sum_k beta_{i,k} gamma_{j,-k}.
// Nonnegative whenever beta is the table of an actual free resolution over
// a polynomial ring and gamma comes from a coherent sheaf.
Rational pairing(const BettiTable& beta, const SupernaturalTable& sheaf);

// The pairing with the diagonal (i = j) kept only for j < tau plus the
// j = tau terms with k <= kappa, the superdiagonal (i = j + 1) kept only
// for j < tau plus the j = tau terms with k <= kappa + 1, and all terms
// with i - j >= 2 kept unconditionally. Nonnegative on minimal free
// resolutions; supplies the facet equations of the cone.
Rational truncated_pairing(const BettiTable& beta,
                           const SupernaturalTable& sheaf,
                           const TruncationSpec& spec);

// Precomputed sums for one (table, sheaf) pair, answering truncated
// pairings for many (tau, kappa) cutoffs in constant-ish time. Matches
// truncated_pairing term for term.
class PairingProfile {
 public:
  PairingProfile(const BettiTable& beta, const SupernaturalTable& sheaf);

  Rational full() const;
  Rational truncated(const TruncationSpec& spec) const;

 private:
  // diagonal_[j]: cumulative sums of beta_{j,k} gamma_{j,-k} by k;
  // superdiagonal_[j]: same with beta_{j+1,k}; spread_ collects every
  // i - j >= 2 term with its sign.
  struct CutoffSums {
    std::vector<std::int64_t> keys;
    std::vector<Rational> prefix;  // prefix[t] = sum over keys[0..t-1]

    Rational up_to(std::optional<std::int64_t> bound) const;
    Rational total() const;
  };

  std::vector<CutoffSums> diagonal_;
  std::vector<CutoffSums> superdiagonal_;
  Rational spread_;
};

}  // namespace betticone
