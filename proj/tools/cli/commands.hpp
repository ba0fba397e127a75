#pragma once

// One runner per subcommand. Each takes a fully populated config struct and
// returns the output table; the CLI layer only parses flags and writes files.

#include <filesystem>
#include <optional>
#include <string>

#include "cli/sweep.hpp"
#include "cli/table.hpp"
#include "thzchan/interface_reflection.hpp"
#include "thzchan/link_budget.hpp"
#include "thzchan/propagation_loss.hpp"
#include "thzchan/stack_file.hpp"

namespace thz::cli {

struct CommonOptions {
  std::string set = "table";
  /// Overrides `set` with a material definition file.
  std::optional<std::filesystem::path> materials_file;
  /// Unset means the subcommand default (dispersive for dielectric and
  /// pathloss, fixed for reflect and stack).
  std::optional<IndexMode> mode;
  OutputFormat format = OutputFormat::csv;
};

MaterialLibrary load_library(const CommonOptions& common);

struct DielectricConfig {
  CommonOptions common;
  std::string material = "whole_blood";
  SweepSpec freq_thz{0.1, 1.0, 91};
};
/// Columns: freq_THz, eps_real, eps_imag, n, kappa, sigma, pen_depth.
/// pen_depth is inf for a lossless point.
Table run_dielectric(const DielectricConfig& config);

enum class PathlossVariable { distance, frequency, wavelength };
PathlossVariable parse_pathloss_variable(std::string_view s);
std::string to_string(PathlossVariable v);

struct PathlossConfig {
  CommonOptions common;
  std::string host = "whole_blood";
  std::optional<std::filesystem::path> populations;
  double freq_thz = 1.0;
  /// When set, replaces freq_thz as the fixed operating point.
  std::optional<double> wavelength_nm;
  double distance_mm = 1.0;
  PathlossVariable variable = PathlossVariable::distance;
  /// Unset: a single row at the fixed operating point.
  std::optional<SweepSpec> sweep;
  Beam beam;
};
/// Columns: x, spread_db, abs_db, scat_db, total_db, with x in mm, THz or nm
/// according to the sweep variable.
Table run_pathloss(const PathlossConfig& config);

struct ReflectConfig {
  CommonOptions common;
  std::string n1 = "skin";  // tissue name or numeric index
  std::string n2 = "air";
  double freq_thz = 1.0;    // used in dispersive mode only
  bool appendix_grid = false;
  /// Degrees. Unset: 0..89 (or 0..90 with appendix_grid).
  std::optional<SweepSpec> angle_deg;
};
/// Columns: theta_deg, r_te_mag, r_tm_mag, r_te_power, r_tm_power.
Table run_reflect(const ReflectConfig& config);

struct StackConfig {
  CommonOptions common;
  /// Unset: blood | fat 1.25 mm | skin 1.0 mm | air.
  std::optional<std::filesystem::path> stack_file;
  bool reverse = false;
  double angle_deg = 0.0;
  Polarization polarization = Polarization::te;
  SweepSpec freq_thz{0.1, 1.0, 901};
};
/// Columns: freq_THz, reflect_pct, transmit_pct, non_reflected_pct, R_ohm, X_ohm.
Table run_stack(const StackConfig& config);

struct BudgetConfig {
  RadioLink link{kDefaultThzTransmitPowerDbw, 0.0, 0.0, 0.0};
  double snr_db = 10.0;
  std::optional<std::string> detector;
  OutputFormat format = OutputFormat::json;
};

struct BudgetResult {
  BudgetReport report;
  std::optional<DetectorSpec> detector;
  std::optional<FeasibilityVerdict> verdict;
};
BudgetResult run_budget(const BudgetConfig& config);
std::string render_budget(const BudgetResult& result, OutputFormat format);

}  // namespace thz::cli
