#include "cli/table.hpp"

#include <cmath>
#include <fmt/format.h>
#include <json.hpp>

#include "thzchan/error.hpp"

namespace thz::cli {

OutputFormat parse_format(std::string_view s) {
  if (s == "csv") return OutputFormat::csv;
  if (s == "json") return OutputFormat::json;
  throw ConfigError(fmt::format("format must be csv or json (got '{}')", s));
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (x == 0.0) return "0";  // folds -0
  if (std::abs(x) < 1e-3) return fmt::format("{:.8e}", x);
  return fmt::format("{:.9g}", x);
}

std::string render_csv(const Table& table) {
  std::string out = "#";
  for (const auto& [key, value] : table.meta) {
    out += fmt::format(" {}={}", key, value);
  }
  out += '\n';
  out += fmt::format("{}\n", fmt::join(table.columns, ","));
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out += ',';
      out += format_number(row[i]);
    }
    out += '\n';
  }
  return out;
}

std::string render_json(const Table& table) {
  // ordered_json keeps meta and columns in insertion order.
  nlohmann::ordered_json doc;
  doc["meta"] = nlohmann::ordered_json::object();
  for (const auto& [key, value] : table.meta) doc["meta"][key] = value;
  doc["columns"] = table.columns;
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (std::isfinite(row[i])) {
        // Round-trip through the CSV text so both formats carry the same digits.
        obj[table.columns[i]] = std::stod(format_number(row[i]));
      } else {
        obj[table.columns[i]] = nullptr;
      }
    }
    doc["rows"].push_back(std::move(obj));
  }
  return doc.dump(2) + "\n";
}

std::string render(const Table& table, OutputFormat format) {
  return format == OutputFormat::csv ? render_csv(table) : render_json(table);
}

}  // namespace thz::cli
