#pragma once

// Material definition files: blocks of `key = value` lines.
//
//   set = my_tissues            # optional, names the library
//   [material]
//   name = whole_blood
//   model = debye               # debye | table
//   eps_inf = 2.1
//   eps_s = 130
//   eps_2 = 3.8
//   tau1_ps = 14.4
//   tau2_ps = 0.1
//
//   [material]
//   name = fat
//   model = table
//   row = 450, 2.13, 6.68e-7    # lambda_nm, eps_real, eps_imag
//
// A file holding a single material may omit the [material] header.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "thzchan/tissue_dielectrics.hpp"

namespace thz {

std::vector<Material> parse_material_definitions(std::string_view text);

/// Library named by the `set` key, else by the file stem.
MaterialLibrary load_material_library(const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace thz
