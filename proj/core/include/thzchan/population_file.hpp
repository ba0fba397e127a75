#pragma once

// Particle population files: one CSV row per population,
//
//   name, radius_um, volume_fraction, rel_index, q_abs, size_class
//
// with size_class one of small | large | auto. Blank lines and `#` comments
// are ignored; a leading header row starting with `name` is skipped.

#include <filesystem>
#include <string_view>
#include <vector>

#include "thzchan/propagation_loss.hpp"

namespace thz {

std::vector<ParticlePopulation> parse_populations(std::string_view text);
std::vector<ParticlePopulation> load_populations(
    const std::filesystem::path& path);

}  // namespace thz
