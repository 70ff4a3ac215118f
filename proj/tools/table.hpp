#pragma once

// Tabular output for the command-line front end: typed columns, CSV and JSON
// emitters, and a JSON reader that inverts the JSON emitter.

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "qbern2d/error.hpp"
#include "qbern2d/scalar.hpp"

namespace qbern2d::cli {

enum class ColumnType { integer, scalar, text };

inline const char* to_string(ColumnType t) {
  switch (t) {
    case ColumnType::integer: return "integer";
    case ColumnType::scalar: return "scalar";
    case ColumnType::text: return "text";
  }
  return "?";
}

inline ColumnType column_type_from_string(const std::string& s) {
  if (s == "integer") return ColumnType::integer;
  if (s == "scalar") return ColumnType::scalar;
  if (s == "text") return ColumnType::text;
  throw ParseError("unknown column type '" + s + "'");
}

struct Column {
  std::string name;
  ColumnType type = ColumnType::scalar;
  bool operator==(const Column&) const = default;
};

using Cell = std::variant<std::int64_t, Scalar, std::string>;

inline std::string cell_text(const Cell& c) {
  return std::visit(
      [](const auto& v) -> std::string {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, std::int64_t>) return std::to_string(v);
        else if constexpr (std::is_same_v<V, Scalar>) return v.to_string();
        else return v;
      },
      c);
}

struct Table {
  inline static constexpr int schema_version = 1;

  std::string command;
  /// Echo of the effective parameters, in insertion order.
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<Column> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row) {
    if (row.size() != columns.size()) throw Error("Table::add_row: arity mismatch");
    rows.push_back(std::move(row));
  }

  bool operator==(const Table&) const = default;
};

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace detail

inline void write_csv(std::ostream& os, const Table& t) {
  for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << detail::csv_field(t.columns[i].name);
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << detail::csv_field(cell_text(row[i]));
    os << '\n';
  }
}

inline nlohmann::ordered_json to_json(const Table& t) {
  nlohmann::ordered_json j;
  j["schema_version"] = Table::schema_version;
  j["command"] = t.command;
  auto& params = j["params"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : t.params) params[k] = v;
  auto& cols = j["columns"] = nlohmann::ordered_json::array();
  for (const auto& c : t.columns) cols.push_back({{"name", c.name}, {"type", to_string(c.type)}});
  auto& rows = j["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json r = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (const auto* n = std::get_if<std::int64_t>(&row[i])) r[t.columns[i].name] = *n;
      else r[t.columns[i].name] = cell_text(row[i]);
    }
    rows.push_back(std::move(r));
  }
  return j;
}

inline void write_json(std::ostream& os, const Table& t) { os << to_json(t).dump(2) << '\n'; }

inline Table table_from_json(const std::string& text) {
  nlohmann::ordered_json j;
  try {
    j = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("table JSON: ") + e.what());
  }
  if (j.value("schema_version", 0) != Table::schema_version) throw ParseError("table JSON: unsupported schema_version");
  Table t;
  t.command = j.at("command").get<std::string>();
  for (const auto& [k, v] : j.at("params").items()) t.params.emplace_back(k, v.get<std::string>());
  for (const auto& c : j.at("columns")) {
    t.columns.push_back({c.at("name").get<std::string>(), column_type_from_string(c.at("type").get<std::string>())});
  }
  for (const auto& r : j.at("rows")) {
    std::vector<Cell> row;
    for (const auto& c : t.columns) {
      const auto& v = r.at(c.name);
      switch (c.type) {
        case ColumnType::integer: row.emplace_back(v.get<std::int64_t>()); break;
        case ColumnType::scalar: row.emplace_back(Scalar::parse(v.get<std::string>())); break;
        case ColumnType::text: row.emplace_back(v.get<std::string>()); break;
      }
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

}  // namespace qbern2d::cli
