#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

namespace hypershadow::cli {

// Empty cells (std::monostate) print as an empty CSV field and as JSON null.
using Cell = std::variant<std::monostate, bool, std::int64_t, std::uint64_t, double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
};

struct RunManifest {
  std::string command;
  nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
  std::uint64_t seed = 0;
  std::string tool_version;
  std::string timestamp;
};

enum class Format { csv, json };

// 17 significant digits with '.' as the decimal separator.
std::string format_real(double value);

// RFC 4180 quoting for fields containing ',', '"' or a line break.
std::string csv_escape(const std::string& field);

void write_csv(const Table& table, std::ostream& out);

nlohmann::ordered_json manifest_json(const RunManifest& manifest);

// {"manifest": {...}, "columns": [...], "rows": [{column: value, ...}, ...]}
nlohmann::ordered_json table_json(const Table& table, const RunManifest& manifest);

void write_json(const Table& table, const RunManifest& manifest, std::ostream& out);

// ISO-8601 UTC with second resolution, e.g. 2024-01-31T12:00:00Z.
std::string iso8601_utc(std::int64_t unix_seconds);

}  // namespace hypershadow::cli
