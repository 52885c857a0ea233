#include "output.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>

#include <json.hpp>

#include "magicpol/errors.hpp"

namespace magicpol::output {
namespace {

std::string cell_text(const Cell& c, bool display) {
  switch (c.kind) {
    case Cell::Kind::Number:
      if (display) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.10g", c.num);
        return buf;
      }
      return format_number(c.num);
    case Cell::Kind::Text: return c.text;
    case Cell::Kind::Flag: return c.flag ? "true" : "false";
    case Cell::Kind::Empty: return "";
  }
  return "";
}

void emit_table(const Document& doc, std::ostream& os) {
  for (const auto& [k, v] : doc.params) os << "# " << k << " = " << v << '\n';
  std::vector<std::size_t> width(doc.columns.size());
  for (std::size_t i = 0; i < doc.columns.size(); ++i)
    width[i] = doc.columns[i].size();
  std::vector<std::vector<std::string>> cells;
  for (const auto& row : doc.rows) {
    std::vector<std::string> r;
    for (std::size_t i = 0; i < row.size(); ++i) {
      r.push_back(cell_text(row[i], true));
      if (i < width.size()) width[i] = std::max(width[i], r.back().size());
    }
    cells.push_back(std::move(r));
  }
  auto pad = [&](const std::string& s, std::size_t w, bool last) {
    os << s;
    if (last) return;
    for (std::size_t k = s.size(); k < w; ++k) os << ' ';
  };
  for (std::size_t i = 0; i < doc.columns.size(); ++i) {
    if (i) os << "  ";
    pad(doc.columns[i], width[i], i + 1 == doc.columns.size());
  }
  os << '\n';
  for (const auto& r : cells) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i) os << "  ";
      pad(r[i], i < width.size() ? width[i] : 0, i + 1 == r.size());
    }
    os << '\n';
  }
  for (const auto& n : doc.notes) os << "note: " << n << '\n';
}

void emit_csv(const Document& doc, std::ostream& os) {
  os << "# command: " << doc.command << '\n';
  for (const auto& [k, v] : doc.params) os << "# " << k << " = " << v << '\n';
  for (const auto& n : doc.notes) os << "# note: " << n << '\n';
  for (std::size_t i = 0; i < doc.columns.size(); ++i) {
    if (i) os << ',';
    os << doc.columns[i];
  }
  os << '\n';
  for (const auto& row : doc.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << ',';
      os << cell_text(row[i], false);
    }
    os << '\n';
  }
}

void emit_json(const Document& doc, std::ostream& os) {
  nlohmann::ordered_json j;
  j["command"] = doc.command;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [k, v] : doc.params) params[k] = v;
  j["params"] = std::move(params);
  j["columns"] = doc.columns;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : doc.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size() && i < doc.columns.size(); ++i) {
      const Cell& c = row[i];
      switch (c.kind) {
        case Cell::Kind::Number: obj[doc.columns[i]] = c.num; break;
        case Cell::Kind::Text: obj[doc.columns[i]] = c.text; break;
        case Cell::Kind::Flag: obj[doc.columns[i]] = c.flag; break;
        case Cell::Kind::Empty: obj[doc.columns[i]] = nullptr; break;
      }
    }
    rows.push_back(std::move(obj));
  }
  j["rows"] = std::move(rows);
  j["notes"] = doc.notes;
  os << j.dump(2) << '\n';
}

}  // namespace

Format parse_format(const std::string& tag) {
  if (tag == "table") return Format::Table;
  if (tag == "csv") return Format::Csv;
  if (tag == "json") return Format::Json;
  throw UsageError("unknown format '" + tag +
                   "' (expected table, csv, or json)");
}

void emit(const Document& doc, Format format, std::ostream& os) {
  switch (format) {
    case Format::Table: emit_table(doc, os); break;
    case Format::Csv: emit_csv(doc, os); break;
    case Format::Json: emit_json(doc, os); break;
  }
}

std::string format_number(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

}  // namespace magicpol::output
