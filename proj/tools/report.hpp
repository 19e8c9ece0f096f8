#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "zeta_bounds/errors.hpp"

namespace zeta_bounds::cli {

using Json = nlohmann::ordered_json;

enum class Format { Json, Csv, Text };

inline Format parse_format(std::string_view text) {
  if (text == "json") return Format::Json;
  if (text == "csv") return Format::Csv;
  if (text == "text") return Format::Text;
  throw DomainError("format must be json, csv or text");
}

/// A command's output: a JSON document plus a flat table for CSV and text.
struct Report {
  Json doc = Json::object();
  std::vector<std::string> columns;
  std::vector<std::vector<Json>> rows;
  int exit_code = 0;
};

/// Every floating value is rounded to 12 significant digits; non-finite
/// values become null.
inline Json num(double v) {
  if (!std::isfinite(v)) return nullptr;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::strtod(buf, nullptr);
}

inline std::string format_cell(Json const& cell) {
  if (cell.is_null()) return "";
  if (cell.is_string()) return cell.get<std::string>();
  if (cell.is_boolean()) return cell.get<bool>() ? "true" : "false";
  if (cell.is_number_integer() || cell.is_number_unsigned()) return cell.dump();
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", cell.get<double>());
  return buf;
}

inline std::string csv_escape(std::string const& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string emit_json(Report const& r) { return r.doc.dump(2) + "\n"; }

inline std::string emit_csv(Report const& r) {
  std::string out;
  for (std::size_t i = 0; i < r.columns.size(); ++i) {
    if (i) out += ',';
    out += csv_escape(r.columns[i]);
  }
  out += '\n';
  for (auto const& row : r.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += csv_escape(format_cell(row[i]));
    }
    out += '\n';
  }
  return out;
}

/// Scalar top-level fields as "key: value" lines, then the table with
/// space-padded columns.
inline std::string emit_text(Report const& r) {
  std::string out;
  for (auto const& [key, value] : r.doc.items()) {
    if (value.is_structured()) continue;
    out += key + ": " + format_cell(value) + "\n";
  }
  if (r.columns.empty()) return out;
  std::vector<std::vector<std::string>> cells;
  cells.emplace_back(r.columns);
  for (auto const& row : r.rows) {
    std::vector<std::string> line;
    for (auto const& cell : row) line.push_back(format_cell(cell));
    cells.push_back(std::move(line));
  }
  std::vector<std::size_t> width(r.columns.size(), 0);
  for (auto const& line : cells) {
    for (std::size_t i = 0; i < line.size() && i < width.size(); ++i) {
      width[i] = std::max(width[i], line[i].size());
    }
  }
  if (!out.empty()) out += '\n';
  for (auto const& line : cells) {
    std::string text;
    for (std::size_t i = 0; i < line.size() && i < width.size(); ++i) {
      if (i) text += "  ";
      text += line[i] + std::string(width[i] - line[i].size(), ' ');
    }
    while (!text.empty() && text.back() == ' ') text.pop_back();
    out += text + '\n';
  }
  return out;
}

inline std::string emit(Report const& r, Format f) {
  switch (f) {
    case Format::Json: return emit_json(r);
    case Format::Csv: return emit_csv(r);
    case Format::Text: return emit_text(r);
  }
  return {};
}

}  // namespace zeta_bounds::cli
