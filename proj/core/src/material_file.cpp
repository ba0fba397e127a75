#include "thzchan/material_file.hpp"

#include <fmt/format.h>

#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "thzchan/error.hpp"
#include "thzchan/text_util.hpp"

namespace thz {

namespace {

struct Block {
  int first_line = 0;
  std::map<std::string, std::string> fields;
  std::vector<std::vector<std::string>> rows;
};

double field(const Block& b, const std::string& key) {
  const auto it = b.fields.find(key);
  if (it == b.fields.end()) {
    throw ConfigError(fmt::format("material block at line {} is missing '{}'",
                                  b.first_line, key));
  }
  return text::parse_double(it->second, key);
}

Material to_material(const Block& b) {
  const auto name_it = b.fields.find("name");
  if (name_it == b.fields.end() || name_it->second.empty()) {
    throw ConfigError(
        fmt::format("material block at line {} has no name", b.first_line));
  }
  const auto model_it = b.fields.find("model");
  const std::string model = model_it == b.fields.end() ? "" : model_it->second;
  const auto note_it = b.fields.find("note");
  std::string note = note_it == b.fields.end() ? "" : note_it->second;

  if (model == "debye") {
    try {
      return Material{name_it->second,
                      DebyeModel::double_debye(
                          field(b, "eps_inf"), field(b, "eps_s"),
                          field(b, "eps_2"), field(b, "tau1_ps") * 1e-12,
                          field(b, "tau2_ps") * 1e-12),
                      std::move(note)};
    } catch (const DomainError& e) {
      throw ConfigError(fmt::format("material '{}': {}", name_it->second,
                                    e.what()));
    }
  }
  if (model == "table") {
    std::vector<TabulatedPoint> pts;
    for (const auto& r : b.rows) {
      if (r.size() != 3) {
        throw ConfigError(fmt::format(
            "material '{}': table rows need lambda_nm, eps_real, eps_imag",
            name_it->second));
      }
      pts.push_back({text::parse_double(r[0], "lambda_nm") / 1e9,
                     {text::parse_double(r[1], "eps_real"),
                      text::parse_double(r[2], "eps_imag")}});
    }
    try {
      return Material{name_it->second, TabulatedCurve(std::move(pts)),
                      std::move(note)};
    } catch (const DomainError& e) {
      throw ConfigError(fmt::format("material '{}': {}", name_it->second,
                                    e.what()));
    }
  }
  throw ConfigError(fmt::format("material '{}': model must be debye or table",
                                name_it->second));
}

struct ParsedFile {
  std::optional<std::string> set_name;
  std::vector<Block> blocks;
};

ParsedFile parse(std::string_view text) {
  ParsedFile out;
  std::optional<Block> current;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = text::strip_comment(raw);
    if (line.empty()) continue;
    if (line == "[material]") {
      if (current) out.blocks.push_back(std::move(*current));
      current = Block{line_no, {}, {}};
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError(fmt::format("line {}: expected 'key = value'", line_no));
    }
    const std::string key(text::trim(line.substr(0, eq)));
    const std::string value(text::trim(line.substr(eq + 1)));
    if (key == "set" && !current) {
      out.set_name = value;
      continue;
    }
    if (!current) current = Block{line_no, {}, {}};
    if (key == "row") {
      current->rows.push_back(text::split(value, ','));
    } else if (!current->fields.emplace(key, value).second) {
      throw ConfigError(
          fmt::format("line {}: duplicate key '{}'", line_no, key));
    }
  }
  if (current) out.blocks.push_back(std::move(*current));
  return out;
}

}  // namespace

std::vector<Material> parse_material_definitions(std::string_view text) {
  std::vector<Material> out;
  for (const auto& b : parse(text).blocks) out.push_back(to_material(b));
  return out;
}

MaterialLibrary load_material_library(const std::filesystem::path& path) {
  const auto parsed = parse(read_text_file(path));
  std::vector<Material> materials;
  for (const auto& b : parsed.blocks) materials.push_back(to_material(b));
  return MaterialLibrary(parsed.set_name.value_or(path.stem().string()),
                         std::move(materials));
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace thz
