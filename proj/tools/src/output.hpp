#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace magicpol::output {

/// One table cell. Numbers keep full precision until emission.
struct Cell {
  enum class Kind { Number, Text, Flag, Empty } kind = Kind::Empty;
  double num = 0.0;
  std::string text;
  bool flag = false;

  static Cell number(double v) { return {Kind::Number, v, {}, false}; }
  static Cell str(std::string s) { return {Kind::Text, 0.0, std::move(s), false}; }
  static Cell boolean(bool b) { return {Kind::Flag, 0.0, {}, b}; }
  static Cell none() { return {}; }
};

/// A command's complete result: echoed parameters, one tabular block, and
/// free-text notes. Deterministic: no timestamps, insertion order preserved.
struct Document {
  std::string command;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::string> notes;
};

enum class Format { Table, Csv, Json };

Format parse_format(const std::string& tag);

void emit(const Document& doc, Format format, std::ostream& os);

/// Shortest round-trip decimal representation ('.' decimal, locale-free).
std::string format_number(double v);

}  // namespace magicpol::output
