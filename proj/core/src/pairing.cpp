#include "betticone/pairing.hpp"

#include <algorithm>

namespace betticone {

Rational pairing(const BettiTable& beta, const SupernaturalTable& sheaf) {
  Rational total = 0;
  const int m = sheaf.dim();
  for (const auto& [key, value] : beta.entries()) {
    const auto [i, k] = key;
    const auto row = sheaf.nonzero_row(-k);
    if (!row || *row > std::min(i, m)) continue;
    const Rational g = sheaf.gamma(*row, -k);
    total += ((i - *row) % 2 == 0 ? value : -value) * g;
  }
  return total;
}

Rational truncated_pairing(const BettiTable& beta,
                           const SupernaturalTable& sheaf,
                           const TruncationSpec& spec) {
  Rational total = 0;
  for (const auto& [key, value] : beta.entries()) {
    const auto [i, k] = key;
    for (int j = 0; j <= std::min(i, sheaf.dim()); ++j) {
      const Rational g = sheaf.gamma(j, -k);
      if (g == 0) continue;
      if (i == j) {
        // Diagonal terms survive below tau, and at tau up to kappa.
        const bool keep =
            j < spec.tau ||
            (j == spec.tau && (!spec.kappa || k <= *spec.kappa));
        if (keep) total += value * g;
      } else if (i == j + 1) {
        // Superdiagonal terms survive below tau, and at tau up to kappa+1.
        const bool keep =
            j < spec.tau ||
            (j == spec.tau && (!spec.kappa || k <= *spec.kappa + 1));
        if (keep) total -= value * g;
      } else {
        total += ((i - j) % 2 == 0 ? value : -value) * g;
      }
    }
  }
  return total;
}

Rational PairingProfile::CutoffSums::up_to(
    std::optional<std::int64_t> bound) const {
  if (!bound) return total();
  const auto it = std::upper_bound(keys.begin(), keys.end(), *bound);
  return prefix[static_cast<std::size_t>(it - keys.begin())];
}

Rational PairingProfile::CutoffSums::total() const { return prefix.back(); }

PairingProfile::PairingProfile(const BettiTable& beta,
                               const SupernaturalTable& sheaf) {
  const int top = std::max(beta.max_column(), sheaf.dim());
  diagonal_.resize(static_cast<std::size_t>(top) + 2);
  superdiagonal_.resize(static_cast<std::size_t>(top) + 2);

  std::vector<std::vector<std::pair<std::int64_t, Rational>>> diag_terms(
      diagonal_.size()),
      super_terms(superdiagonal_.size());

  for (const auto& [key, value] : beta.entries()) {
    const auto [i, k] = key;
    for (int j = 0; j <= std::min(i, sheaf.dim()); ++j) {
      const Rational g = sheaf.gamma(j, -k);
      if (g == 0) continue;
      if (i == j) {
        diag_terms[static_cast<std::size_t>(j)].emplace_back(k, value * g);
      } else if (i == j + 1) {
        super_terms[static_cast<std::size_t>(j)].emplace_back(k, value * g);
      } else {
        spread_ += ((i - j) % 2 == 0 ? value : -value) * g;
      }
    }
  }

  const auto pack = [](std::vector<std::pair<std::int64_t, Rational>>& terms,
                       CutoffSums& sums) {
    std::sort(terms.begin(), terms.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    sums.prefix.assign(1, Rational(0));
    for (auto& [k, v] : terms) {
      sums.keys.push_back(k);
      sums.prefix.push_back(sums.prefix.back() + v);
    }
  };
  for (std::size_t j = 0; j < diagonal_.size(); ++j) {
    pack(diag_terms[j], diagonal_[j]);
    pack(super_terms[j], superdiagonal_[j]);
  }
}

Rational PairingProfile::full() const {
  Rational total = spread_;
  for (const auto& sums : diagonal_) total += sums.total();
  for (const auto& sums : superdiagonal_) total -= sums.total();
  return total;
}

Rational PairingProfile::truncated(const TruncationSpec& spec) const {
  Rational total = spread_;
  const int levels = static_cast<int>(diagonal_.size());
  for (int j = 0; j < std::min(spec.tau, levels); ++j) {
    total += diagonal_[static_cast<std::size_t>(j)].total();
    total -= superdiagonal_[static_cast<std::size_t>(j)].total();
  }
  if (spec.tau >= 0 && spec.tau < levels) {
    total += diagonal_[static_cast<std::size_t>(spec.tau)].up_to(spec.kappa);
    const auto bumped =
        spec.kappa ? std::optional<std::int64_t>(*spec.kappa + 1) : spec.kappa;
    total -=
        superdiagonal_[static_cast<std::size_t>(spec.tau)].up_to(bumped);
  }
  return total;
}

}  // namespace betticone
