#pragma once

// Stack definition files:
//
//   incident = blood
//   fat, 1.25          # material, thickness_mm
//   skin, 1.0
//   exit = air
//
// Names resolve either to the fixed tissue indices (air 1, fat 1.58,
// skin 1.73, blood 1.97) or to dispersive materials from a library. A name
// that parses as a number is taken as a fixed real index.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "thzchan/multilayer_stack.hpp"

namespace thz {

enum class IndexMode { fixed, dispersive };

std::string to_string(IndexMode mode);
IndexMode parse_index_mode(std::string_view s);

struct StackDefinition {
  struct Entry {
    std::string material;
    double thickness_mm;
  };
  std::string incident;
  std::vector<Entry> layers;
  std::string exit;
};

StackDefinition parse_stack_definition(std::string_view text);
StackDefinition load_stack_definition(const std::filesystem::path& path);

/// Fixed index for air/fat/skin/blood; throws ResolutionError otherwise.
double fixed_tissue_index(const std::string& name);

struct ResolvedStack {
  LayerStack stack;
  /// One "name->resolution" note per distinct medium, for output provenance.
  std::vector<std::string> notes;
};

/// In dispersive mode a name is looked up in `library` (blood -> whole_blood,
/// skin -> skin or skin_dermis when the exact name is absent); media without
/// dielectric data there fall back to their fixed index.
ResolvedStack resolve_stack(const StackDefinition& def, IndexMode mode,
                            const MaterialLibrary& library);

/// blood | fat (1.25 mm) | skin (1.0 mm) | air with fixed indices.
LayerStack default_tissue_stack();

}  // namespace thz
