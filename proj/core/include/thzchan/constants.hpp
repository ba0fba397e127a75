#pragma once

#include <numbers>

namespace thz {

// Constants are pinned to the values used by the reference MATLAB scripts so
// that golden numbers reproduce that arithmetic rather than CODATA.
inline constexpr double kPi = std::numbers::pi;
inline constexpr double kSpeedOfLight = 3.0e8;          // m/s
inline constexpr double kVacuumPermittivity = 8.85e-12; // F/m
inline constexpr double kTissuePermeability = 1.25e-6;  // H/m
inline constexpr double kFreeSpaceImpedance = 376.73;   // ohm

// Fixed refractive indices used for the interface and layered-stack figures.
namespace fixed_index {
inline constexpr double kAir = 1.0;
inline constexpr double kFat = 1.58;
inline constexpr double kSkin = 1.73;
inline constexpr double kBlood = 1.97;
}  // namespace fixed_index

}  // namespace thz
