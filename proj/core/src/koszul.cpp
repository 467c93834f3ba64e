#include "betticone/koszul.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <thread>
#include <vector>

#include "betticone/errors.hpp"
#include "betticone/exact_matrix.hpp"

namespace betticone {

namespace {

using Contribution = std::map<std::pair<int, std::int64_t>, std::int64_t>;

// Homology ranks of the Koszul complex slice in one multidegree. The
// chain group in homological degree i has one basis vector per squarefree
// subset tau of supp(b) with |tau| = i and x^{b - tau} outside the ideal;
// the boundary drops one element of tau at a time with alternating signs,
// landing on basis vectors only (other targets are zero in S/I).
void accumulate_multidegree(const MonomialIdeal& ideal,
                            const std::vector<int>& multidegree,
                            Contribution& out) {
  std::vector<int> support;
  for (std::size_t t = 0; t < multidegree.size(); ++t) {
    if (multidegree[t] > 0) support.push_back(static_cast<int>(t));
  }
  const int s = static_cast<int>(support.size());
  const std::uint32_t subsets = 1u << s;

  std::vector<int> level_index(subsets);     // position within its level
  std::vector<bool> kept(subsets, false);
  std::vector<std::vector<std::uint32_t>> levels(
      static_cast<std::size_t>(s) + 1);

  std::vector<int> exponent = multidegree;
  for (std::uint32_t mask = 0; mask < subsets; ++mask) {
    for (int p = 0; p < s; ++p) {
      if (mask & (1u << p)) --exponent[static_cast<std::size_t>(support[p])];
    }
    if (!ideal.contains(exponent)) {
      const int level = std::popcount(mask);
      kept[mask] = true;
      level_index[mask] =
          static_cast<int>(levels[static_cast<std::size_t>(level)].size());
      levels[static_cast<std::size_t>(level)].push_back(mask);
    }
    for (int p = 0; p < s; ++p) {
      if (mask & (1u << p)) ++exponent[static_cast<std::size_t>(support[p])];
    }
  }

  std::size_t total_kept = 0;
  for (const auto& level : levels) total_kept += level.size();
  if (total_kept == 0) return;

  // rank of the boundary map from level i to level i-1
  std::vector<std::size_t> boundary_rank(static_cast<std::size_t>(s) + 2, 0);
  for (int i = 1; i <= s; ++i) {
    const auto& sources = levels[static_cast<std::size_t>(i)];
    const auto& targets = levels[static_cast<std::size_t>(i) - 1];
    if (sources.empty() || targets.empty()) continue;
    ExactMatrix boundary(targets.size(), sources.size());
    for (std::size_t col = 0; col < sources.size(); ++col) {
      const std::uint32_t mask = sources[col];
      int sign_position = 0;
      for (int p = 0; p < s; ++p) {
        if (!(mask & (1u << p))) continue;
        const std::uint32_t sub = mask & ~(1u << p);
        if (kept[sub]) {
          boundary.at(static_cast<std::size_t>(level_index[sub]), col) =
              (sign_position % 2 == 0) ? 1 : -1;
        }
        ++sign_position;
      }
    }
    boundary_rank[static_cast<std::size_t>(i)] = boundary.rank();
  }

  std::int64_t total_degree = 0;
  for (const int b : multidegree) total_degree += b;
  for (int i = 0; i <= s; ++i) {
    const std::int64_t homology =
        static_cast<std::int64_t>(levels[static_cast<std::size_t>(i)].size()) -
        static_cast<std::int64_t>(boundary_rank[static_cast<std::size_t>(i)]) -
        static_cast<std::int64_t>(
            boundary_rank[static_cast<std::size_t>(i) + 1]);
    if (homology != 0) out[{i, total_degree}] += homology;
  }
}

std::vector<int> decode_multidegree(std::uint64_t index,
                                    const std::vector<int>& radix) {
  std::vector<int> multidegree(radix.size());
  for (std::size_t t = 0; t < radix.size(); ++t) {
    multidegree[t] = static_cast<int>(index % static_cast<std::uint64_t>(
                                                  radix[t]));
    index /= static_cast<std::uint64_t>(radix[t]);
  }
  return multidegree;
}

}  // namespace

BettiTable koszul_betti_table(const MonomialIdeal& ideal,
                              const KoszulOptions& options) {
  if (ideal.vars() > options.max_vars) {
    throw TooLargeError("ideal has " + std::to_string(ideal.vars()) +
                        " variables, bound is " +
                        std::to_string(options.max_vars));
  }
  if (ideal.max_generator_degree() > options.max_total_degree) {
    throw TooLargeError("generator degree " +
                        std::to_string(ideal.max_generator_degree()) +
                        " exceeds the bound " +
                        std::to_string(options.max_total_degree));
  }

  // Betti multidegrees sit below the componentwise lcm of the generators;
  // the box is walked as a mixed-radix counter.
  const std::vector<int> lcm = ideal.lcm_exponents();
  std::vector<int> radix(lcm.size());
  std::uint64_t box = 1;
  for (std::size_t t = 0; t < lcm.size(); ++t) {
    radix[t] = lcm[t] + 1;
    box *= static_cast<std::uint64_t>(radix[t]);
  }

  unsigned workers = options.threads != 0
                         ? options.threads
                         : std::max(1u, std::min(
                                            std::thread::hardware_concurrency(),
                                            8u));
  workers = static_cast<unsigned>(
      std::min<std::uint64_t>(workers, std::max<std::uint64_t>(box, 1)));

  std::vector<Contribution> partials(workers);
  const auto work = [&](unsigned worker) {
    for (std::uint64_t index = worker; index < box; index += workers) {
      accumulate_multidegree(ideal, decode_multidegree(index, radix),
                             partials[worker]);
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(work, w);
  }

  BettiTable table(ideal.vars());
  for (const auto& partial : partials) {
    for (const auto& [key, count] : partial) {
      table.add(key.first, key.second, count);
    }
  }
  return table;
}

}  // namespace betticone
