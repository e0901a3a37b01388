#include "hypershadow_cli/output.hpp"

#include <cmath>
#include <ctime>
#include <stdexcept>

#include <fmt/format.h>

namespace hypershadow::cli {
namespace {

std::string render_csv(const Cell& cell) {
  return std::visit(
      [](const auto& value) -> std::string {
        using T = std::decay_t<decltype(value)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return {};
        } else if constexpr (std::is_same_v<T, bool>) {
          return value ? "true" : "false";
        } else if constexpr (std::is_same_v<T, double>) {
          return format_real(value);
        } else if constexpr (std::is_same_v<T, std::string>) {
          return csv_escape(value);
        } else {
          return std::to_string(value);
        }
      },
      cell);
}

nlohmann::ordered_json render_json(const Cell& cell) {
  return std::visit(
      [](const auto& value) -> nlohmann::ordered_json {
        using T = std::decay_t<decltype(value)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return nullptr;
        } else if constexpr (std::is_same_v<T, double>) {
          if (!std::isfinite(value)) return nullptr;
          return value;
        } else {
          return value;
        }
      },
      cell);
}

}  // namespace

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) throw std::logic_error("Table::add_row: column count mismatch");
  rows.push_back(std::move(row));
}

std::string format_real(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  // fmt ignores the global locale unless asked, so the separator is always '.'.
  return fmt::format("{:.17g}", value);
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string quoted = "\"";
  for (char c : field) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

void write_csv(const Table& table, std::ostream& out) {
  std::string line;
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i) line += ',';
    line += csv_escape(table.columns[i]);
  }
  out << line << '\n';
  for (const auto& row : table.rows) {
    line.clear();
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) line += ',';
      line += render_csv(row[i]);
    }
    out << line << '\n';
  }
}

nlohmann::ordered_json manifest_json(const RunManifest& manifest) {
  nlohmann::ordered_json json;
  json["command"] = manifest.command;
  json["parameters"] = manifest.parameters;
  json["seed"] = manifest.seed;
  json["tool_version"] = manifest.tool_version;
  json["timestamp"] = manifest.timestamp;
  return json;
}

nlohmann::ordered_json table_json(const Table& table, const RunManifest& manifest) {
  nlohmann::ordered_json json;
  json["manifest"] = manifest_json(manifest);
  json["columns"] = table.columns;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json object = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) object[table.columns[i]] = render_json(row[i]);
    rows.push_back(std::move(object));
  }
  json["rows"] = std::move(rows);
  return json;
}

void write_json(const Table& table, const RunManifest& manifest, std::ostream& out) {
  out << table_json(table, manifest).dump(2) << '\n';
}

std::string iso8601_utc(std::int64_t unix_seconds) {
  const std::time_t t = static_cast<std::time_t>(unix_seconds);
  std::tm utc{};
  if (gmtime_r(&t, &utc) == nullptr) throw std::runtime_error("timestamp out of range");
  char buffer[32];
  std::strftime(buffer, sizeof buffer, "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buffer;
}

}  // namespace hypershadow::cli
