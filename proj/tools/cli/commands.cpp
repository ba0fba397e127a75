#include "cli/commands.hpp"

#include <cmath>
#include <fmt/format.h>
#include <json.hpp>

#include "thzchan/error.hpp"
#include "thzchan/material_file.hpp"
#include "thzchan/population_file.hpp"

namespace thz::cli {

namespace {

constexpr double kTHz = 1e12;

std::string set_label(const CommonOptions& common, const MaterialLibrary& lib) {
  return common.materials_file ? lib.set_name() + "(file)" : lib.set_name();
}

IndexMode mode_or(const CommonOptions& common, IndexMode fallback) {
  return common.mode.value_or(fallback);
}

void require_dispersive(const CommonOptions& common, const char* command) {
  if (mode_or(common, IndexMode::dispersive) != IndexMode::dispersive) {
    throw ConfigError(fmt::format(
        "{} needs dispersive material data; fixed mode applies to reflect and stack",
        command));
  }
}

std::string join_notes(const std::vector<std::string>& notes) {
  return fmt::format("{}", fmt::join(notes, ";"));
}

}  // namespace

MaterialLibrary load_library(const CommonOptions& common) {
  if (common.materials_file) return load_material_library(*common.materials_file);
  return MaterialLibrary::builtin(common.set);
}

Table run_dielectric(const DielectricConfig& config) {
  require_dispersive(config.common, "dielectric");
  const auto lib = load_library(config.common);
  const auto& material = lib.at(config.material);
  Table t;
  t.meta = {{"set", set_label(config.common, lib)},
            {"mode", to_string(IndexMode::dispersive)},
            {"material", material.name}};
  t.columns = {"freq_THz", "eps_real", "eps_imag", "n", "kappa", "sigma", "pen_depth"};
  for (const double f_thz : config.freq_thz.values()) {
    const double f = f_thz * kTHz;
    if (!(f > 0.0)) throw DomainError("frequency must be positive");
    const auto eps = lookup_permittivity(material, frequency_to_wavelength(f));
    const auto n = permittivity_to_index(eps);
    const double sigma = conductivity(eps.imag_part, f);
    const auto depth = penetration_depth(sigma, f);
    t.rows.push_back({f_thz, eps.real_part, eps.imag_part, n.n_real, n.n_imag, sigma,
                      depth.value_or(std::numeric_limits<double>::infinity())});
  }
  return t;
}

PathlossVariable parse_pathloss_variable(std::string_view s) {
  if (s == "distance") return PathlossVariable::distance;
  if (s == "frequency") return PathlossVariable::frequency;
  if (s == "wavelength") return PathlossVariable::wavelength;
  throw ConfigError(fmt::format(
      "sweep variable must be distance, frequency or wavelength (got '{}')", s));
}

std::string to_string(PathlossVariable v) {
  switch (v) {
    case PathlossVariable::distance: return "distance_mm";
    case PathlossVariable::frequency: return "freq_THz";
    case PathlossVariable::wavelength: return "wavelength_nm";
  }
  return "x";
}

Table run_pathloss(const PathlossConfig& config) {
  require_dispersive(config.common, "pathloss");
  const auto lib = load_library(config.common);
  PropagationMedium medium{lib.at(config.host), {}};
  if (config.populations) medium.particles = load_populations(*config.populations);
  try {
    validate(medium);
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }

  const double fixed_freq = config.wavelength_nm
                                ? kSpeedOfLight / (*config.wavelength_nm * 1e-9)
                                : config.freq_thz * kTHz;
  std::vector<double> xs;
  if (config.sweep) {
    xs = config.sweep->values();
  } else {
    switch (config.variable) {
      case PathlossVariable::distance: xs = {config.distance_mm}; break;
      case PathlossVariable::frequency: xs = {fixed_freq / kTHz}; break;
      case PathlossVariable::wavelength:
        xs = {kSpeedOfLight / fixed_freq * 1e9};
        break;
    }
  }

  Table t;
  t.meta = {{"set", set_label(config.common, lib)},
            {"mode", to_string(IndexMode::dispersive)},
            {"host", medium.host.name},
            {"populations", config.populations
                                ? config.populations->filename().string()
                                : std::string("none")},
            {"x", to_string(config.variable)}};
  if (config.variable != PathlossVariable::distance) {
    t.meta.emplace_back("distance_mm", format_number(config.distance_mm));
  } else if (config.wavelength_nm) {
    t.meta.emplace_back("wavelength_nm", format_number(*config.wavelength_nm));
  } else {
    t.meta.emplace_back("freq_THz", format_number(config.freq_thz));
  }
  t.columns = {"x", "spread_db", "abs_db", "scat_db", "total_db"};
  bool near_field = false;
  for (const double x : xs) {
    double f = fixed_freq;
    double d = config.distance_mm * 1e-3;
    switch (config.variable) {
      case PathlossVariable::distance: d = x * 1e-3; break;
      case PathlossVariable::frequency: f = x * kTHz; break;
      case PathlossVariable::wavelength:
        if (!(x > 0.0)) throw DomainError("wavelength must be positive");
        f = kSpeedOfLight / (x * 1e-9);
        break;
    }
    const auto b = total_path_loss(medium, f, d, config.beam);
    near_field = near_field || b.regime == FieldRegime::near;
    t.rows.push_back({x, b.spread_db, b.absorption_db, b.scattering_db, b.total_db});
  }
  if (config.beam.kind != Beam::Kind::isotropic) {
    t.meta.emplace_back("directivity", format_number(directivity(config.beam)));
  }
  if (near_field) t.meta.emplace_back("warning", "near-field-rows");
  return t;
}

Table run_reflect(const ReflectConfig& config) {
  const auto lib = load_library(config.common);
  const auto mode = mode_or(config.common, IndexMode::fixed);
  const auto resolved = resolve_stack({config.n1, {}, config.n2}, mode, lib);
  const double f = config.freq_thz * kTHz;
  if (!(f > 0.0)) throw DomainError("frequency must be positive");
  const InterfaceSpec iface{index_at(resolved.stack.incident, f),
                            index_at(resolved.stack.exit, f)};

  std::vector<double> degrees;
  std::vector<double> grid;
  if (config.angle_deg) {
    degrees = config.angle_deg->values();
    for (const double deg : degrees) {
      if (!(deg >= 0.0 && deg <= 90.0)) {
        throw DomainError(fmt::format("angle must be in [0, 90] degrees (got {})", deg));
      }
      grid.push_back(deg == 90.0 ? kPi / 2.0 : deg_to_rad(deg));
    }
  } else {
    grid = config.appendix_grid ? appendix_angle_grid() : default_angle_grid();
    for (std::size_t i = 0; i < grid.size(); ++i) degrees.push_back(static_cast<double>(i));
  }
  const auto te = reflectance_sweep(iface, grid, Polarization::te);
  const auto tm = reflectance_sweep(iface, grid, Polarization::tm);

  Table t;
  t.meta = {{"set", set_label(config.common, lib)},
            {"mode", to_string(mode)},
            {"interface", config.n1 + "->" + config.n2},
            {"media", join_notes(resolved.notes)}};
  if (mode == IndexMode::dispersive) {
    t.meta.emplace_back("freq_THz", format_number(config.freq_thz));
  }
  t.columns = {"theta_deg", "r_te_mag", "r_tm_mag", "r_te_power", "r_tm_power"};
  for (std::size_t i = 0; i < grid.size(); ++i) {
    t.rows.push_back({degrees[i], te[i].magnitude, tm[i].magnitude,
                      te[i].magnitude * te[i].magnitude,
                      tm[i].magnitude * tm[i].magnitude});
  }
  return t;
}

Table run_stack(const StackConfig& config) {
  const auto lib = load_library(config.common);
  const auto mode = mode_or(config.common, IndexMode::fixed);
  ResolvedStack resolved;
  if (config.stack_file) {
    resolved = resolve_stack(load_stack_definition(*config.stack_file), mode, lib);
  } else {
    resolved = resolve_stack({"blood",
                              {{"fat", kDefaultFatThickness * 1e3},
                               {"skin", kDefaultSkinThickness * 1e3}},
                              "air"},
                             mode, lib);
  }
  auto stack = config.reverse ? resolved.stack.reversed() : resolved.stack;
  if (!(config.angle_deg >= 0.0 && config.angle_deg < 90.0)) {
    throw DomainError(
        fmt::format("angle must be in [0, 90) degrees (got {})", config.angle_deg));
  }

  std::vector<double> freqs;
  for (const double f_thz : config.freq_thz.values()) freqs.push_back(f_thz * kTHz);
  const auto rows = frequency_sweep(stack, freqs, deg_to_rad(config.angle_deg),
                                    config.polarization);

  std::vector<std::string> layers;
  for (const auto& l : stack.layers) {
    layers.push_back(fmt::format("{}:{}mm", l.label, format_number(l.thickness * 1e3)));
  }
  Table t;
  t.meta = {{"set", set_label(config.common, lib)},
            {"mode", to_string(mode)},
            {"stack", fmt::format("{}|{}|{}", stack.incident_label,
                                  fmt::join(layers, "|"), stack.exit_label)},
            {"direction", config.reverse ? "reverse" : "forward"},
            {"angle_deg", format_number(config.angle_deg)},
            {"pol", config.polarization == Polarization::te ? "te" : "tm"},
            {"media", join_notes(resolved.notes)}};
  t.columns = {"freq_THz", "reflect_pct", "transmit_pct", "non_reflected_pct", "R_ohm", "X_ohm"};
  for (const auto& r : rows) {
    t.rows.push_back({r.frequency / kTHz, r.reflect_percent, r.transmit_percent,
                      r.non_reflected_percent, r.resistance, r.reactance});
  }
  return t;
}

BudgetResult run_budget(const BudgetConfig& config) {
  BudgetResult out;
  out.report = evaluate_budget(config.link, config.snr_db);
  if (config.detector) {
    out.detector = resolve_detector(*config.detector);
    out.verdict = link_feasibility(out.report, *out.detector, config.snr_db);
  }
  return out;
}

std::string render_budget(const BudgetResult& result, OutputFormat format) {
  const auto& r = result.report;
  std::vector<std::pair<std::string, double>> fields = {
      {"p_t_dbw", r.link.p_t},
      {"g_t_db", r.link.g_t},
      {"g_r_db", r.link.g_r},
      {"loss_db", r.link.loss_db},
      {"snr_target_db", r.snr_target_db},
      {"p_r_dbw", r.p_r_dbw},
      {"p_r_watts", r.p_r_watts},
      {"required_sensitivity_dbw", r.required_sensitivity_dbw},
      {"required_sensitivity_watts", r.required_sensitivity_watts}};
  if (result.detector) {
    fields.emplace_back("detector_sensitivity_dbw", result.detector->sensitivity);
    fields.emplace_back("margin_db", result.verdict->margin_db);
  }
  if (format == OutputFormat::csv) {
    Table t;
    t.meta = {{"report", "budget"}};
    if (result.detector) {
      t.meta.emplace_back("detector", result.detector->name);
      t.meta.emplace_back("feasible", result.verdict->feasible ? "true" : "false");
    }
    std::vector<double> row;
    for (const auto& [name, value] : fields) {
      t.columns.push_back(name);
      row.push_back(value);
    }
    t.rows.push_back(std::move(row));
    return render_csv(t);
  }
  nlohmann::ordered_json doc;
  for (const auto& [name, value] : fields) doc[name] = std::stod(format_number(value));
  if (result.detector) {
    doc["detector"] = result.detector->name;
    doc["feasible"] = result.verdict->feasible;
  }
  return doc.dump(2) + "\n";
}

}  // namespace thz::cli
