#include "betticone/betti_table.hpp"

#include <string>

namespace betticone {

namespace {

std::string slot_name(int i, std::int64_t j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

BettiTable::BettiTable(int ambient_vars) : ambient_vars_(ambient_vars) {
  if (ambient_vars < 1) {
    throw InvalidTableError("ambient variable count must be positive");
  }
}

Rational BettiTable::get(int i, std::int64_t j) const {
  const auto it = entries_.find({i, j});
  return it == entries_.end() ? Rational(0) : it->second;
}

void BettiTable::set(int i, std::int64_t j, const Rational& value) {
  if (i < 0 || i > ambient_vars_) {
    throw InvalidTableError("homological degree " + std::to_string(i) +
                            " outside [0, " + std::to_string(ambient_vars_) +
                            "]");
  }
  if (value < 0) {
    throw NegativeEntryError("negative entry at " + slot_name(i, j));
  }
  if (value == 0) {
    entries_.erase({i, j});
  } else {
    entries_[{i, j}] = value;
  }
}

void BettiTable::add(int i, std::int64_t j, const Rational& delta) {
  set(i, j, get(i, j) + delta);
}

int BettiTable::max_column() const {
  int top = -1;
  for (const auto& [key, value] : entries_) top = std::max(top, key.first);
  return top;
}

std::optional<std::int64_t> BettiTable::min_shift(int column) const {
  std::optional<std::int64_t> best;
  for (const auto& [key, value] : entries_) {
    if (key.first != column) continue;
    if (!best || key.second < *best) best = key.second;
  }
  return best;
}

std::optional<std::int64_t> BettiTable::max_shift(int column) const {
  std::optional<std::int64_t> best;
  for (const auto& [key, value] : entries_) {
    if (key.first != column) continue;
    if (!best || key.second > *best) best = key.second;
  }
  return best;
}

std::int64_t BettiTable::min_internal_degree() const {
  std::int64_t best = entries_.begin()->first.second;
  for (const auto& [key, value] : entries_) best = std::min(best, key.second);
  return best;
}

std::int64_t BettiTable::max_internal_degree() const {
  std::int64_t best = entries_.begin()->first.second;
  for (const auto& [key, value] : entries_) best = std::max(best, key.second);
  return best;
}

bool BettiTable::is_pure() const {
  int previous_column = -1;
  for (const auto& [key, value] : entries_) {
    if (key.first == previous_column) return false;  // map is (i, j) sorted
    previous_column = key.first;
  }
  return true;
}

BettiTable BettiTable::scaled(const Rational& factor) const {
  BettiTable result(ambient_vars_);
  for (const auto& [key, value] : entries_) {
    result.set(key.first, key.second, value * factor);
  }
  return result;
}

BettiTable axpy(const BettiTable& base, const Rational& coefficient,
                const BettiTable& direction) {
  if (base.ambient_vars() != direction.ambient_vars()) {
    throw InvalidTableError("ambient variable counts differ: " +
                            std::to_string(base.ambient_vars()) + " vs " +
                            std::to_string(direction.ambient_vars()));
  }
  BettiTable result = base;
  for (const auto& [key, value] : direction.entries()) {
    result.add(key.first, key.second, coefficient * value);
  }
  return result;
}

}  // namespace betticone
