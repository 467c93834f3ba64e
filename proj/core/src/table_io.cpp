#include "betticone/table_io.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace betticone {

std::string table_to_json(const BettiTable& table, int indent) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [key, value] : table.entries()) {  // already (i, j) sorted
    entries.push_back({key.first, key.second, rational_to_string(value)});
  }
  nlohmann::json doc;
  doc["vars"] = table.ambient_vars();
  doc["entries"] = std::move(entries);
  return doc.dump(indent);
}

BettiTable table_from_json(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("vars") || !doc.contains("entries")) {
    throw ParseError("table JSON needs an object with 'vars' and 'entries'");
  }
  if (!doc["vars"].is_number_integer()) {
    throw ParseError("'vars' must be an integer");
  }
  BettiTable table(doc["vars"].get<int>());
  if (!doc["entries"].is_array()) {
    throw ParseError("'entries' must be an array");
  }
  for (const auto& item : doc["entries"]) {
    if (!item.is_array() || item.size() != 3 ||
        !item[0].is_number_integer() || !item[1].is_number_integer()) {
      throw ParseError("each entry must be [i, j, value]");
    }
    Rational value;
    if (item[2].is_string()) {
      try {
        value = parse_rational(item[2].get<std::string>());
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
      }
    } else if (item[2].is_number_integer()) {
      value = Rational(item[2].get<std::int64_t>());
    } else {
      throw ParseError("entry values must be strings or integers");
    }
    table.add(item[0].get<int>(), item[1].get<std::int64_t>(), value);
  }
  return table;
}

std::string render_layout(const BettiTable& table) {
  if (table.empty()) return "(empty table)\n";

  const int columns = table.max_column() + 1;
  std::int64_t row_min = 0, row_max = 0;
  bool first = true;
  for (const auto& [key, value] : table.entries()) {
    const std::int64_t row = key.second - key.first;
    if (first) {
      row_min = row_max = row;
      first = false;
    } else {
      row_min = std::min(row_min, row);
      row_max = std::max(row_max, row);
    }
  }

  // Cell text per (row, column); "." for empty slots.
  const auto cell = [&](std::int64_t row, int col) {
    const Rational value = table.get(col, row + col);
    return value == 0 ? std::string(".") : rational_to_string(value);
  };

  std::vector<std::size_t> widths(static_cast<std::size_t>(columns), 1);
  std::size_t label_width = 0;
  for (std::int64_t row = row_min; row <= row_max; ++row) {
    label_width = std::max(label_width, std::to_string(row).size());
    for (int col = 0; col < columns; ++col) {
      widths[static_cast<std::size_t>(col)] = std::max(
          widths[static_cast<std::size_t>(col)], cell(row, col).size());
    }
  }
  for (int col = 0; col < columns; ++col) {
    widths[static_cast<std::size_t>(col)] = std::max(
        widths[static_cast<std::size_t>(col)], std::to_string(col).size());
  }

  std::ostringstream out;
  out << std::string(label_width + 2, ' ');
  for (int col = 0; col < columns; ++col) {
    const std::string header = std::to_string(col);
    out << std::string(widths[static_cast<std::size_t>(col)] + 1 -
                           header.size(),
                       ' ')
        << header;
  }
  out << '\n';
  for (std::int64_t row = row_min; row <= row_max; ++row) {
    const std::string label = std::to_string(row);
    out << std::string(label_width - label.size(), ' ') << label << ": ";
    for (int col = 0; col < columns; ++col) {
      const std::string text = cell(row, col);
      out << std::string(widths[static_cast<std::size_t>(col)] + 1 -
                             text.size(),
                         ' ')
          << text;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace betticone
