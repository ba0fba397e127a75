#include "thzchan/population_file.hpp"

#include <fmt/format.h>

#include <sstream>

#include "thzchan/error.hpp"
#include "thzchan/material_file.hpp"
#include "thzchan/text_util.hpp"

namespace thz {

namespace {

SizeClass parse_size_class(const std::string& s, int line_no) {
  if (s == "small") return SizeClass::small;
  if (s == "large") return SizeClass::large;
  if (s == "auto") return SizeClass::automatic;
  throw ConfigError(fmt::format(
      "line {}: size_class must be small, large or auto (got '{}')", line_no,
      s));
}

}  // namespace

std::vector<ParticlePopulation> parse_populations(std::string_view text) {
  std::vector<ParticlePopulation> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = text::strip_comment(raw);
    if (line.empty()) continue;
    const auto fields = text::split(line, ',');
    if (fields.front() == "name") continue;
    if (fields.size() != 6) {
      throw ConfigError(fmt::format(
          "line {}: expected name, radius_um, volume_fraction, rel_index, "
          "q_abs, size_class",
          line_no));
    }
    ParticlePopulation p;
    p.name = fields[0];
    p.radius = text::parse_double(fields[1], "radius_um") * 1e-6;
    p.volume_fraction = text::parse_double(fields[2], "volume_fraction");
    p.relative_index = text::parse_double(fields[3], "rel_index");
    p.absorption_efficiency = text::parse_double(fields[4], "q_abs");
    p.size_class = parse_size_class(fields[5], line_no);
    out.push_back(std::move(p));
  }
  PropagationMedium probe{MaterialLibrary::builtin("table").at("water"), out};
  try {
    validate(probe);
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  return out;
}

std::vector<ParticlePopulation> load_populations(
    const std::filesystem::path& path) {
  return parse_populations(read_text_file(path));
}

}  // namespace thz
