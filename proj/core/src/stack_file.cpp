#include "thzchan/stack_file.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <charconv>
#include <optional>
#include <sstream>

#include "thzchan/constants.hpp"
#include "thzchan/error.hpp"
#include "thzchan/material_file.hpp"
#include "thzchan/text_util.hpp"

namespace thz {

std::string to_string(IndexMode mode) {
  return mode == IndexMode::fixed ? "fixed" : "dispersive";
}

IndexMode parse_index_mode(std::string_view s) {
  if (s == "fixed") return IndexMode::fixed;
  if (s == "dispersive") return IndexMode::dispersive;
  throw ConfigError(
      fmt::format("index mode must be fixed or dispersive (got '{}')", s));
}

StackDefinition parse_stack_definition(std::string_view text) {
  StackDefinition def;
  bool seen_incident = false;
  bool seen_exit = false;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = text::strip_comment(raw);
    if (line.empty()) continue;
    if (const auto eq = line.find('='); eq != std::string_view::npos) {
      const auto key = text::trim(line.substr(0, eq));
      const std::string value(text::trim(line.substr(eq + 1)));
      if (key == "incident" && !seen_incident && def.layers.empty()) {
        def.incident = value;
        seen_incident = true;
      } else if (key == "exit" && seen_incident && !seen_exit) {
        def.exit = value;
        seen_exit = true;
      } else {
        throw ConfigError(fmt::format(
            "line {}: expected 'incident = ...' first and 'exit = ...' last",
            line_no));
      }
      continue;
    }
    if (!seen_incident || seen_exit) {
      throw ConfigError(fmt::format(
          "line {}: layers must sit between the incident and exit headers",
          line_no));
    }
    const auto fields = text::split(line, ',');
    if (fields.size() != 2) {
      throw ConfigError(
          fmt::format("line {}: expected 'material, thickness_mm'", line_no));
    }
    const double mm = text::parse_double(fields[1], "thickness_mm");
    if (!(mm > 0.0)) {
      throw ConfigError(
          fmt::format("line {}: thickness must be positive", line_no));
    }
    def.layers.push_back({fields[0], mm});
  }
  if (!seen_incident || !seen_exit) {
    throw ConfigError("stack definition needs both incident and exit headers");
  }
  return def;
}

StackDefinition load_stack_definition(const std::filesystem::path& path) {
  return parse_stack_definition(read_text_file(path));
}

double fixed_tissue_index(const std::string& name) {
  if (name == "air") return fixed_index::kAir;
  if (name == "fat") return fixed_index::kFat;
  if (name == "skin") return fixed_index::kSkin;
  if (name == "blood") return fixed_index::kBlood;
  throw ResolutionError(fmt::format(
      "no fixed index for '{}' (known: air, fat, skin, blood)", name));
}

namespace {

std::optional<double> numeric_index(const std::string& name) {
  double v = 0.0;
  const auto* end = name.data() + name.size();
  const auto [ptr, ec] = std::from_chars(name.data(), end, v);
  if (ec == std::errc{} && ptr == end && v > 0.0) return v;
  return std::nullopt;
}

std::optional<std::string> library_name(const std::string& name,
                                        const MaterialLibrary& library) {
  if (library.contains(name)) return name;
  const std::vector<std::pair<std::string, std::string>> aliases = {
      {"blood", "whole_blood"}, {"skin", "skin_dermis"}};
  for (const auto& [alias, target] : aliases) {
    if (name == alias && library.contains(target)) return target;
  }
  return std::nullopt;
}

IndexSource resolve_medium(const std::string& name, IndexMode mode,
                           const MaterialLibrary& library,
                           std::vector<std::string>& notes) {
  const auto note = [&](const std::string& what) {
    auto entry = name + "->" + what;
    if (std::find(notes.begin(), notes.end(), entry) == notes.end()) {
      notes.push_back(std::move(entry));
    }
  };
  if (const auto v = numeric_index(name)) {
    note(fmt::format("n={}", *v));
    return std::complex<double>(*v, 0.0);
  }
  if (mode == IndexMode::dispersive) {
    if (const auto found = library_name(name, library)) {
      note(library.set_name() + ":" + *found);
      return library.at(*found);
    }
  }
  const double n = fixed_tissue_index(name);
  note(fmt::format("n={}", n));
  return std::complex<double>(n, 0.0);
}

}  // namespace

ResolvedStack resolve_stack(const StackDefinition& def, IndexMode mode,
                            const MaterialLibrary& library) {
  ResolvedStack out;
  out.stack.incident = resolve_medium(def.incident, mode, library, out.notes);
  out.stack.incident_label = def.incident;
  for (const auto& e : def.layers) {
    out.stack.layers.push_back(
        {resolve_medium(e.material, mode, library, out.notes),
         e.thickness_mm * 1e-3, e.material});
  }
  out.stack.exit = resolve_medium(def.exit, mode, library, out.notes);
  out.stack.exit_label = def.exit;
  return out;
}

LayerStack default_tissue_stack() {
  using c = std::complex<double>;
  return LayerStack{c(fixed_index::kBlood),
                    {{c(fixed_index::kFat), kDefaultFatThickness, "fat"},
                     {c(fixed_index::kSkin), kDefaultSkinThickness, "skin"}},
                    c(fixed_index::kAir),
                    "blood",
                    "air"};
}

}  // namespace thz
