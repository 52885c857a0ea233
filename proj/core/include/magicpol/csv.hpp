#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace magicpol::csv {

/// One parsed data line: comma-separated fields with surrounding whitespace
/// trimmed. `#` lines and blank lines are skipped by Reader.
struct Row {
  long line_no = 0;
  std::vector<std::string> fields;
};

std::vector<std::string> split_fields(std::string_view line);

/// Reads a whole CSV file: header row first, then data rows. Comment lines
/// start with '#'. The dialect uses '.' decimals and no quoting; fields must
/// not contain commas.
struct File {
  std::vector<std::string> header;
  std::vector<Row> rows;
};

File read_file(const std::string& path);

}  // namespace magicpol::csv
