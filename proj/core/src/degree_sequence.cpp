#include "betticone/degree_sequence.hpp"

#include <charconv>

#include "betticone/errors.hpp"

namespace betticone {

DegreeSequence::DegreeSequence(std::vector<std::int64_t> degrees)
    : degrees_(std::move(degrees)) {
  if (degrees_.empty()) {
    throw NotIncreasingError("degree sequence must be nonempty");
  }
  for (std::size_t i = 1; i < degrees_.size(); ++i) {
    if (degrees_[i - 1] >= degrees_[i]) {
      throw NotIncreasingError("degree sequence is not strictly increasing: " +
                               to_string());
    }
  }
}

DegreeSequence DegreeSequence::parse(std::string_view text) {
  std::vector<std::int64_t> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view piece = text.substr(pos, comma - pos);
    std::int64_t value = 0;
    const auto [ptr, ec] =
        std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (ec != std::errc{} || ptr != piece.data() + piece.size()) {
      throw std::invalid_argument("malformed degree sequence: '" +
                                  std::string(text) + "'");
    }
    values.push_back(value);
    pos = comma + 1;
    if (comma == text.size()) break;
  }
  return DegreeSequence(std::move(values));
}

std::string DegreeSequence::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < degrees_.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(degrees_[i]);
  }
  out += ")";
  return out;
}

std::partial_ordering compare_sequences(const DegreeSequence& d,
                                        const DegreeSequence& e) {
  if (d == e) return std::partial_ordering::equivalent;

  // With infinity padding, d <= e needs d at least as long and termwise <=
  // on e's entries.
  const auto le = [](const DegreeSequence& lo, const DegreeSequence& hi) {
    if (lo.length() < hi.length()) return false;
    for (std::size_t i = 0; i < hi.length(); ++i) {
      if (lo[i] > hi[i]) return false;
    }
    return true;
  };

  if (le(d, e)) return std::partial_ordering::less;
  if (le(e, d)) return std::partial_ordering::greater;
  return std::partial_ordering::unordered;
}

bool sequence_le(const DegreeSequence& d, const DegreeSequence& e) {
  const auto order = compare_sequences(d, e);
  return order == std::partial_ordering::less ||
         order == std::partial_ordering::equivalent;
}

bool sequence_lt(const DegreeSequence& d, const DegreeSequence& e) {
  return compare_sequences(d, e) == std::partial_ordering::less;
}

}  // namespace betticone
