#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "betticone/betti_table.hpp"
#include "betticone/degree_sequence.hpp"

namespace betticone::testutil {

inline BettiTable make_table(
    int vars,
    const std::vector<std::tuple<int, std::int64_t, std::string>>& entries) {
  BettiTable table(vars);
  for (const auto& [i, j, value] : entries) {
    table.set(i, j, parse_rational(value));
  }
  return table;
}

// Betti table of S/(x^2, xy, xz^2) over three variables.
inline BettiTable worked_example_table() {
  return make_table(3, {{0, 0, "1"},
                        {1, 2, "2"},
                        {1, 3, "1"},
                        {2, 3, "1"},
                        {2, 4, "2"},
                        {3, 5, "1"}});
}

// Strictly increasing sequence with the given length, entries in
// [low, high].
inline DegreeSequence random_sequence(std::mt19937_64& rng, std::size_t length,
                                      std::int64_t low, std::int64_t high) {
  std::vector<std::int64_t> pool;
  for (std::int64_t v = low; v <= high; ++v) pool.push_back(v);
  // Partial Fisher-Yates: the first `length` slots become a random sample.
  for (std::size_t i = 0; i < length; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, pool.size() - 1);
    std::swap(pool[i], pool[pick(rng)]);
  }
  std::vector<std::int64_t> values(pool.begin(),
                                   pool.begin() + static_cast<long>(length));
  std::sort(values.begin(), values.end());
  return DegreeSequence(std::move(values));
}

}  // namespace betticone::testutil
