#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "betticone/betti_table.hpp"

namespace betticone {

// Malformed serialized data (bad JSON, bad rational strings, ...).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// {"vars": n, "entries": [[i, j, "num/den"], ...]} with entries sorted by
// (i, j). Rationals with denominator 1 are written bare ("5").
std::string table_to_json(const BettiTable& table, int indent = 2);
BettiTable table_from_json(std::string_view json_text);

// Array rendering with beta_{i,j} printed in column i, row j - i; zero
// slots are dots.
std::string render_layout(const BettiTable& table);

}  // namespace betticone
