#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "bicomm/algebra.hpp"

namespace bicomm {

// On-disk algebra description:
//   { "dim": m,
//     "basis": ["e1", ...],              // optional; defaults to e1..em
//     "table": [[["0","1"], ...], ...] } // table[i][j] = coordinates of e_i*e_j
// Coefficients are exact: integers or "p/q" strings. Floating-point values
// are rejected outright rather than rounded.
inline Rational rational_from_json(const nlohmann::json& v) {
  if (v.is_number_integer()) return Rational(static_cast<long>(v.get<long long>()));
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  if (v.is_number_float()) throw ParseError("floating-point coefficients are not accepted");
  throw ParseError("expected an integer or a \"p/q\" string");
}

inline StructureAlgebra algebra_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("algebra description must be an object");
  if (!j.contains("dim") || !j.at("dim").is_number_integer()) {
    throw ParseError("algebra description needs an integer \"dim\"");
  }
  long dim = j.at("dim").get<long>();
  if (dim < 1 || dim > 64) throw ParseError("algebra dimension out of range");
  std::vector<std::string> basis;
  if (j.contains("basis")) {
    const auto& b = j.at("basis");
    if (!b.is_array() || static_cast<long>(b.size()) != dim) {
      throw ParseError("\"basis\" must list one label per dimension");
    }
    for (const auto& x : b) {
      if (!x.is_string()) throw ParseError("basis labels must be strings");
      basis.push_back(x.get<std::string>());
    }
  } else {
    for (long i = 1; i <= dim; ++i) basis.push_back("e" + std::to_string(i));
  }
  if (!j.contains("table") || !j.at("table").is_array() ||
      static_cast<long>(j.at("table").size()) != dim) {
    throw ParseError("\"table\" must be a dim x dim x dim array");
  }
  std::vector<Rational> table;
  table.reserve(static_cast<std::size_t>(dim * dim * dim));
  for (const auto& row : j.at("table")) {
    if (!row.is_array() || static_cast<long>(row.size()) != dim) {
      throw ParseError("\"table\" must be a dim x dim x dim array");
    }
    for (const auto& cell : row) {
      if (!cell.is_array() || static_cast<long>(cell.size()) != dim) {
        throw ParseError("\"table\" must be a dim x dim x dim array");
      }
      for (const auto& v : cell) table.push_back(rational_from_json(v));
    }
  }
  return StructureAlgebra(std::move(basis), std::move(table));
}

inline StructureAlgebra load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open algebra file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(buf.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON in ") + path + ": " + e.what());
  }
  return algebra_from_json(j);
}

inline nlohmann::ordered_json algebra_to_json(const StructureAlgebra& a) {
  nlohmann::ordered_json j;
  j["dim"] = a.dim();
  j["basis"] = a.labels();
  nlohmann::ordered_json table = nlohmann::ordered_json::array();
  for (int i = 0; i < a.dim(); ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (int jj = 0; jj < a.dim(); ++jj) {
      nlohmann::ordered_json cell = nlohmann::ordered_json::array();
      for (int k = 0; k < a.dim(); ++k) cell.push_back(a.c(i, jj, k).str());
      row.push_back(std::move(cell));
    }
    table.push_back(std::move(row));
  }
  j["table"] = std::move(table);
  return j;
}

}  // namespace bicomm
