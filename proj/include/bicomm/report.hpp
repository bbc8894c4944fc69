#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "bicomm/errors.hpp"
#include "bicomm/version.hpp"

namespace bicomm {

// A small tabular result: named columns, string cells (rationals rendered as
// exact "p/q"), plus the invocation metadata every report carries. The same
// table renders to any of the three output formats.
struct ReportTable {
  std::string command;
  std::vector<std::pair<std::string, std::string>> parameters;  // insertion order kept
  std::vector<std::string> headers;
  std::vector<std::vector<std::string>> rows;

  void add_row(std::vector<std::string> row) {
    if (row.size() != headers.size()) throw DomainError("report row width mismatch");
    rows.push_back(std::move(row));
  }
};

inline std::string render_json(const ReportTable& t) {
  nlohmann::ordered_json j;
  j["command"] = t.command;
  j["version"] = kVersion;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [k, v] : t.parameters) params[k] = v;
  j["parameters"] = std::move(params);
  j["headers"] = t.headers;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) rows.push_back(row);
  j["rows"] = std::move(rows);
  return j.dump(2) + "\n";
}

namespace detail {

inline std::string csv_escape(const std::string& s) {
  bool quote = s.find_first_of(",\"\n") != std::string::npos;
  if (!quote) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace detail

// CSV starts with comment lines ("# key: value") carrying the metadata,
// then a header row, then data rows.
inline std::string render_csv(const ReportTable& t) {
  std::string out;
  out += "# command: " + t.command + "\n";
  out += "# version: " + std::string(kVersion) + "\n";
  for (const auto& [k, v] : t.parameters) out += "# " + k + ": " + v + "\n";
  for (std::size_t i = 0; i < t.headers.size(); ++i) {
    if (i) out += ",";
    out += detail::csv_escape(t.headers[i]);
  }
  out += "\n";
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ",";
      out += detail::csv_escape(row[i]);
    }
    out += "\n";
  }
  return out;
}

inline std::string render_pretty(const ReportTable& t) {
  std::string out = t.command;
  for (const auto& [k, v] : t.parameters) out += "  " + k + "=" + v;
  out += "\n";
  std::vector<std::size_t> width(t.headers.size(), 0);
  for (std::size_t i = 0; i < t.headers.size(); ++i) width[i] = t.headers[i].size();
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  auto emit = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += "  ";
      out += cells[i];
      if (i + 1 < cells.size()) out.append(width[i] - cells[i].size(), ' ');
    }
    out += "\n";
  };
  emit(t.headers);
  std::vector<std::string> rule;
  for (std::size_t w : width) rule.push_back(std::string(w, '-'));
  emit(rule);
  for (const auto& row : t.rows) emit(row);
  return out;
}

inline std::string render(const ReportTable& t, const std::string& format) {
  if (format == "json") return render_json(t);
  if (format == "csv") return render_csv(t);
  if (format == "pretty") return render_pretty(t);
  throw DomainError("unknown output format: " + format);
}

}  // namespace bicomm
