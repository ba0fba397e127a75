#include "cli/app.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fmt/format.h>
#include <fstream>
#include <ostream>

#include "cli/commands.hpp"
#include "thzchan/error.hpp"

namespace thz::cli {

namespace {

namespace fs = std::filesystem;

struct SweepFlags {
  std::optional<double> start;
  std::optional<double> stop;
  std::optional<int> points;
  std::string spacing = "lin";

  void add_to(CLI::App& cmd, const std::string& unit) {
    cmd.add_option("--start", start, "Sweep start (" + unit + ")");
    cmd.add_option("--stop", stop, "Sweep stop (" + unit + ")");
    cmd.add_option("--points", points, "Number of grid points (>= 1)");
    cmd.add_option("--spacing", spacing, "Grid spacing: lin | log")
        ->capture_default_str();
  }

  bool given() const { return start || stop || points; }

  /// Merges the flags over `base`.
  SweepSpec resolve(SweepSpec base) const {
    if (start) base.start = *start;
    if (stop) base.stop = *stop;
    if (points) base.points = *points;
    base.spacing = parse_spacing(spacing);
    return base;
  }
};

Beam parse_beam(const std::string& kind, double half_width_deg) {
  if (kind == "isotropic") return Beam::isotropic();
  const double w = deg_to_rad(half_width_deg);
  if (kind == "cone") return Beam::cone(w);
  if (kind == "gaussian") return Beam::gaussian(w);
  throw ConfigError(fmt::format(
      "beam must be isotropic, cone or gaussian (got '{}')", kind));
}

Polarization parse_polarization(const std::string& s) {
  if (s == "te") return Polarization::te;
  if (s == "tm") return Polarization::tm;
  throw ConfigError(fmt::format("polarization must be te or tm (got '{}')", s));
}

// Relative input paths are tried against the working directory first, then
// against the directory of the --config file, so scenario files can name
// data next to them.
fs::path locate(const std::string& p, const std::string& config_file) {
  const fs::path path(p);
  if (path.is_absolute() || fs::exists(path) || config_file.empty()) return path;
  const auto beside = fs::path(config_file).parent_path() / path;
  return fs::exists(beside) ? beside : path;
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw ConfigError("cannot write " + out_path);
  file << text;
}

}  // namespace

int run_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Terahertz/optical in-body channel calculator", "thzchan"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "Read options from an INI/TOML scenario file");

  std::string out_path;
  std::string format = "csv";
  std::string set = "table";
  std::string mode;
  std::string materials;
  app.add_option("--out", out_path, "Output file (default: stdout)");
  app.add_option("--format", format, "Output format: csv | json");
  app.add_option("--set", set, "Built-in parameter set: table | appendix | optical")
      ->capture_default_str();
  app.add_option("--mode", mode, "Index mode: fixed | dispersive");
  app.add_option("--materials", materials, "Material definition file (replaces --set)");

  // dielectric
  auto* dielectric = app.add_subcommand("dielectric", "Permittivity, index, conductivity vs frequency");
  dielectric->configurable();
  std::string d_material = "whole_blood";
  SweepFlags d_sweep;
  dielectric->add_option("--material", d_material, "Material name")->capture_default_str();
  d_sweep.add_to(*dielectric, "THz");

  // pathloss
  auto* pathloss = app.add_subcommand("pathloss", "Spreading, absorption and scattering loss");
  pathloss->configurable();
  std::string p_host = "whole_blood";
  std::string p_populations;
  std::string p_variable = "distance";
  double p_freq = 1.0;
  std::optional<double> p_wavelength;
  double p_distance = 1.0;
  std::string p_beam = "isotropic";
  double p_half_width = 180.0;
  SweepFlags p_sweep;
  pathloss->add_option("--host", p_host, "Host material")->capture_default_str();
  pathloss->add_option("--populations", p_populations, "Particle population CSV");
  pathloss->add_option("--freq-thz", p_freq, "Operating frequency (THz)")->capture_default_str();
  pathloss->add_option("--wavelength-nm", p_wavelength, "Operating wavelength (nm); overrides --freq-thz");
  pathloss->add_option("--distance-mm", p_distance, "Distance (mm)")->capture_default_str();
  pathloss->add_option("--sweep", p_variable, "Swept variable: distance | frequency | wavelength")
      ->capture_default_str();
  pathloss->add_option("--beam", p_beam, "Beam: isotropic | cone | gaussian")->capture_default_str();
  pathloss->add_option("--half-width-deg", p_half_width, "Beam half-width (degrees)");
  p_sweep.add_to(*pathloss, "mm, THz or nm");

  // reflect
  auto* reflect = app.add_subcommand("reflect", "Single-interface TE/TM reflection vs angle");
  reflect->configurable();
  std::string r_n1 = "skin";
  std::string r_n2 = "air";
  double r_freq = 1.0;
  bool r_appendix = false;
  SweepFlags r_sweep;
  reflect->add_option("--n1", r_n1, "Incidence medium: tissue name or index")->capture_default_str();
  reflect->add_option("--n2", r_n2, "Transmission medium: tissue name or index")->capture_default_str();
  reflect->add_option("--freq-thz", r_freq, "Frequency for dispersive mode (THz)");
  reflect->add_flag("--appendix-grid", r_appendix, "Integer degrees 0..90 inclusive");
  r_sweep.add_to(*reflect, "degrees");

  // stack
  auto* stack = app.add_subcommand("stack", "Multilayer reflection/transmission vs frequency");
  stack->configurable();
  std::string s_file;
  bool s_reverse = false;
  double s_angle = 0.0;
  std::string s_pol = "te";
  SweepFlags s_sweep;
  stack->add_option("--stack", s_file, "Stack definition file (default: blood|fat|skin|air)");
  stack->add_flag("--reverse", s_reverse, "Swap half-spaces and reverse the layers");
  stack->add_option("--angle-deg", s_angle, "Incidence angle (degrees)");
  stack->add_option("--pol", s_pol, "Polarization: te | tm");
  s_sweep.add_to(*stack, "THz");

  // budget
  auto* budget = app.add_subcommand("budget", "Link budget and receiver sensitivity");
  budget->configurable();
  BudgetConfig b;
  std::string b_detector;
  budget->add_option("--pt-dbw", b.link.p_t, "Transmit power (dBW)")->capture_default_str();
  budget->add_option("--gt-db", b.link.g_t, "Transmit gain (dB)");
  budget->add_option("--gr-db", b.link.g_r, "Receive gain (dB)");
  budget->add_option("--loss-db", b.link.loss_db, "Channel loss (dB)");
  budget->add_option("--snr-db", b.snr_db, "Target SNR (dB)")->capture_default_str();
  budget->add_option("--detector", b_detector, "Detector name or sensitivity in dBW");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  }

  const auto* config_opt = app.get_option("--config");
  const std::string config_file =
      config_opt->count() > 0 ? config_opt->as<std::string>() : std::string();
  try {
    CommonOptions common;
    common.set = set;
    if (!materials.empty()) common.materials_file = locate(materials, config_file);
    if (!mode.empty()) common.mode = parse_index_mode(mode);
    common.format = parse_format(format);

    std::string text;
    if (dielectric->parsed()) {
      DielectricConfig c;
      c.common = common;
      c.material = d_material;
      c.freq_thz = d_sweep.resolve(c.freq_thz);
      text = render(run_dielectric(c), common.format);
    } else if (pathloss->parsed()) {
      PathlossConfig c;
      c.common = common;
      c.host = p_host;
      if (!p_populations.empty()) c.populations = locate(p_populations, config_file);
      c.freq_thz = p_freq;
      c.wavelength_nm = p_wavelength;
      c.distance_mm = p_distance;
      c.variable = parse_pathloss_variable(p_variable);
      if (p_sweep.given()) c.sweep = p_sweep.resolve({});
      c.beam = parse_beam(p_beam, p_half_width);
      text = render(run_pathloss(c), common.format);
    } else if (reflect->parsed()) {
      ReflectConfig c{common, r_n1, r_n2, r_freq, r_appendix, std::nullopt};
      if (r_sweep.given()) c.angle_deg = r_sweep.resolve({0.0, 89.0, 90});
      text = render(run_reflect(c), common.format);
    } else if (stack->parsed()) {
      StackConfig c;
      c.common = common;
      if (!s_file.empty()) c.stack_file = locate(s_file, config_file);
      c.reverse = s_reverse;
      c.angle_deg = s_angle;
      c.polarization = parse_polarization(s_pol);
      c.freq_thz = s_sweep.resolve(c.freq_thz);
      text = render(run_stack(c), common.format);
    } else if (budget->parsed()) {
      if (!b_detector.empty()) b.detector = b_detector;
      // The budget report defaults to JSON unless csv is asked for explicitly.
      b.format = app.get_option("--format")->count() > 0 ? common.format : OutputFormat::json;
      text = render_budget(run_budget(b), b.format);
    }
    emit(text, out_path, out);
    return kExitOk;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
}

}  // namespace thz::cli
