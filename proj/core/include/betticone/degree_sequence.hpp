#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace betticone {

// A strictly increasing tuple of integers (d_0, ..., d_r). Entries may be
// negative. Sequences are compared termwise after conceptually padding the
// shorter one with +infinity, so a longer sequence can only be smaller.
class DegreeSequence {
 public:
  explicit DegreeSequence(std::vector<std::int64_t> degrees);

  // Parses "0,2,3,5".
  static DegreeSequence parse(std::string_view text);

  std::size_t length() const { return degrees_.size(); }
  // r, the top homological index of the pure diagram of this type.
  std::size_t top_index() const { return degrees_.size() - 1; }
  std::int64_t operator[](std::size_t i) const { return degrees_[i]; }
  std::int64_t back() const { return degrees_.back(); }
  const std::vector<std::int64_t>& degrees() const { return degrees_; }

  bool operator==(const DegreeSequence&) const = default;

  std::string to_string() const;  // "(0,2,3,5)"

 private:
  std::vector<std::int64_t> degrees_;
};

// d <= e  iff  len(d) >= len(e) and d_i <= e_i for all i < len(e).
// Returns std::partial_ordering::unordered when neither direction holds.
std::partial_ordering compare_sequences(const DegreeSequence& d,
                                        const DegreeSequence& e);

bool sequence_le(const DegreeSequence& d, const DegreeSequence& e);
bool sequence_lt(const DegreeSequence& d, const DegreeSequence& e);

}  // namespace betticone
