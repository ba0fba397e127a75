#pragma once

// Plot-ready output tables. Numbers are written with 9 significant digits
// (scientific below 1e-3) so that identical inputs give byte-identical files.

#include <string>
#include <string_view>
#include <vector>

namespace thz::cli {

enum class OutputFormat { csv, json };

OutputFormat parse_format(std::string_view s);

struct Table {
  /// Provenance as ordered key/value pairs (parameter set, index mode, ...).
  std::vector<std::pair<std::string, std::string>> meta;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

std::string format_number(double x);

/// `# key=value ...` comment line, header row, then one line per row.
std::string render_csv(const Table& table);
/// {"meta": {...}, "columns": [...], "rows": [{...}, ...]}; non-finite -> null.
std::string render_json(const Table& table);
std::string render(const Table& table, OutputFormat format);

}  // namespace thz::cli
