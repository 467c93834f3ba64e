#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>

#include "betticone/errors.hpp"
#include "betticone/rational.hpp"

namespace betticone {

// A finite grid of strictly positive rationals beta_{i,j}, indexed by
// homological degree i and internal degree j. Zero entries are never
// stored. The homological range is capped by the ambient variable count
// (Hilbert syzygy bound). The entry map is ordered by (i, j), which makes
// iteration order and serialization deterministic.
class BettiTable {
 public:
  using Key = std::pair<int, std::int64_t>;  // (i, j)
  using EntryMap = std::map<Key, Rational>;

  explicit BettiTable(int ambient_vars);

  int ambient_vars() const { return ambient_vars_; }
  const EntryMap& entries() const { return entries_; }

  bool empty() const { return entries_.empty(); }
  std::size_t support_size() const { return entries_.size(); }

  // Stored value, or zero when the slot is empty.
  Rational get(int i, std::int64_t j) const;

  // Setting zero erases; negative values throw NegativeEntryError;
  // i outside [0, ambient_vars] throws InvalidTableError.
  void set(int i, std::int64_t j, const Rational& value);

  // Adds delta to the slot, erasing on exact cancellation. Throws
  // NegativeEntryError when the result would be negative.
  void add(int i, std::int64_t j, const Rational& delta);

  // Largest homological degree with a nonzero entry; -1 when empty.
  int max_column() const;

  std::optional<std::int64_t> min_shift(int column) const;
  std::optional<std::int64_t> max_shift(int column) const;

  // Extremes of the internal degree over the whole support (table nonempty).
  std::int64_t min_internal_degree() const;
  std::int64_t max_internal_degree() const;

  // True when every nonzero column holds exactly one entry.
  bool is_pure() const;

  BettiTable scaled(const Rational& factor) const;

  bool operator==(const BettiTable&) const = default;

 private:
  int ambient_vars_;
  EntryMap entries_;
};

// base + coefficient * direction, exactly. Entries that cancel to zero are
// removed; a negative result throws NegativeEntryError. Both tables must
// share the ambient variable count.
BettiTable axpy(const BettiTable& base, const Rational& coefficient,
                const BettiTable& direction);

}  // namespace betticone
