#include "thzchan/tissue_dielectrics.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <fmt/ranges.h>

#include "thzchan/error.hpp"

namespace thz {

double ComplexPermittivity::magnitude() const {
  return std::hypot(real_part, imag_part);
}

DebyeModel::DebyeModel(double eps_inf, std::vector<DebyeTerm> terms)
    : eps_inf_(eps_inf), terms_(std::move(terms)) {
  if (terms_.empty()) throw DomainError("Debye model needs at least one term");
  if (!(eps_inf_ >= 1.0)) {
    throw DomainError(fmt::format("eps_inf must be >= 1 (got {})", eps_inf_));
  }
  for (const auto& t : terms_) {
    if (!(t.relaxation_time > 0.0)) {
      throw DomainError(fmt::format("relaxation time must be positive (got {})",
                                    t.relaxation_time));
    }
  }
}

DebyeModel DebyeModel::double_debye(double eps_inf, double eps_s, double eps_2,
                                    double tau1, double tau2) {
  return DebyeModel(eps_inf, {{eps_s, tau1}, {eps_2, tau2}});
}

TabulatedCurve::TabulatedCurve(std::vector<TabulatedPoint> points)
    : points_(std::move(points)) {
  if (points_.size() < 2) {
    throw DomainError("tabulated curve needs at least two points");
  }
  for (std::size_t i = 1; i < points_.size(); ++i) {
    if (!(points_[i].wavelength > points_[i - 1].wavelength)) {
      throw DomainError("tabulated wavelengths must be strictly increasing");
    }
  }
}

MaterialLibrary::MaterialLibrary(std::string set_name,
                                 std::vector<Material> materials)
    : set_name_(std::move(set_name)) {
  for (auto& m : materials) {
    const auto name = m.name;
    if (!materials_.emplace(name, std::move(m)).second) {
      throw ConfigError(fmt::format("duplicate material '{}' in set '{}'",
                                    name, set_name_));
    }
  }
}

bool MaterialLibrary::contains(const std::string& name) const {
  return materials_.count(name) != 0;
}

const Material& MaterialLibrary::at(const std::string& name) const {
  const auto it = materials_.find(name);
  if (it == materials_.end()) {
    throw ResolutionError(fmt::format("unknown material '{}' in set '{}' (known: {})",
                                      name, set_name_,
                                      fmt::join(names(), ", ")));
  }
  return it->second;
}

std::vector<std::string> MaterialLibrary::names() const {
  std::vector<std::string> out;
  out.reserve(materials_.size());
  for (const auto& [name, _] : materials_) out.push_back(name);
  return out;
}

namespace {

constexpr double kPs = 1e-12;
constexpr double kNm = 1e-9;
// nm -> m by division: correctly rounded, so 450 nm equals the literal 450e-9.
double nm_to_m(double nm) { return nm / 1e9; }

Material debye(std::string name, double eps_inf, double eps_s, double eps_2,
               double tau1_ps, double tau2_ps, std::string provenance) {
  return Material{std::move(name),
                  DebyeModel::double_debye(eps_inf, eps_s, eps_2,
                                           tau1_ps * kPs, tau2_ps * kPs),
                  std::move(provenance)};
}

MaterialLibrary make_table_set() {
  const std::string note = "Debye table (water, whole blood, skin)";
  return MaterialLibrary(
      "table", {debye("water", 3.3, 78.8, 4.5, 8.4, 0.1, note),
                debye("whole_blood", 2.1, 130.0, 3.8, 14.4, 0.1, note),
                debye("skin", 3.0, 60.0, 3.6, 10.6, 0.2, note)});
}

MaterialLibrary make_appendix_set() {
  const std::string note = "reference MATLAB script parameter blocks";
  return MaterialLibrary(
      "appendix", {debye("whole_blood", 2.1, 130.0, 3.8, 14.4, 0.1, note),
                   debye("blood_plasma", 1.7, 78.0, 3.6, 8.0, 0.1, note),
                   debye("water", 3.3, 87.8, 4.5, 8.4, 0.5, note),
                   debye("skin_dermis", 3.6, 60.0, 3.0, 10.0, 0.2, note),
                   debye("skin_epidermis", 3.6, 58.0, 3.0, 9.4, 0.18, note)});
}

MaterialLibrary make_optical_set() {
  // lambda (nm), then (eps', eps'') for fat, hemoglobin, water.
  struct Row {
    double nm;
    double fat_re, fat_im, hb_re, hb_im, water_re, water_im;
  };
  static constexpr Row rows[] = {
      {450, 2.13, 6.68e-7, 2.04, 3.46e-3, 1.78, 2.72e-9},
      {500, 2.13, 2.20e-7, 2.03, 1.26e-3, 1.78, 2.68e-9},
      {550, 2.13, 9.89e-8, 2.01, 2.86e-3, 1.77, 5.35e-9},
      {600, 2.13, 6.47e-8, 1.99, 2.50e-4, 1.77, 2.91e-8},
      {650, 2.13, 7.12e-8, 1.99, 2.87e-5, 1.77, 4.36e-8},
      {700, 2.13, 5.26e-8, 1.99, 2.43e-5, 1.77, 9.22e-8},
      {750, 2.13, 1.70e-7, 1.99, 4.68e-5, 1.76, 4.14e-7},
      {800, 2.13, 7.45e-8, 1.99, 7.83e-5, 1.76, 3.35e-7},
      {850, 2.13, 1.26e-7, 1.99, 1.08e-4, 1.76, 7.81e-7},
      {900, 2.13, 9.66e-7, 1.99, 1.29e-4, 1.76, 1.33e-6},
      {950, 2.13, 8.69e-7, 1.99, 1.37e-4, 1.76, 7.79e-6},
      {1000, 2.13, 6.17e-7, 1.99, 1.23e-4, 1.76, 7.67e-6},
  };
  std::vector<TabulatedPoint> fat, hb, water;
  for (const auto& r : rows) {
    fat.push_back({nm_to_m(r.nm), {r.fat_re, r.fat_im}});
    hb.push_back({nm_to_m(r.nm), {r.hb_re, r.hb_im}});
    water.push_back({nm_to_m(r.nm), {r.water_re, r.water_im}});
  }
  const std::string note = "relative permittivity vs wavelength, 450-1000 nm";
  return MaterialLibrary(
      "optical", {{"fat", TabulatedCurve(std::move(fat)), note},
                  {"hemoglobin", TabulatedCurve(std::move(hb)), note},
                  {"water", TabulatedCurve(std::move(water)), note}});
}

}  // namespace

const MaterialLibrary& MaterialLibrary::builtin(const std::string& set_name) {
  static const MaterialLibrary table = make_table_set();
  static const MaterialLibrary appendix = make_appendix_set();
  static const MaterialLibrary optical = make_optical_set();
  if (set_name == "table") return table;
  if (set_name == "appendix") return appendix;
  if (set_name == "optical") return optical;
  throw ResolutionError(fmt::format(
      "unknown parameter set '{}' (known: table, appendix, optical)", set_name));
}

std::vector<std::string> MaterialLibrary::builtin_set_names() {
  return {"table", "appendix", "optical"};
}

ComplexPermittivity debye_permittivity(const DebyeModel& model,
                                       double frequency) {
  if (!(frequency > 0.0)) {
    throw DomainError(
        fmt::format("frequency must be positive (got {})", frequency));
  }
  const double omega = 2.0 * kPi * frequency;
  const auto& terms = model.terms();
  double re = model.eps_inf();
  double im = 0.0;
  for (std::size_t j = 0; j < terms.size(); ++j) {
    const double next =
        j + 1 < terms.size() ? terms[j + 1].eps_step_start : model.eps_inf();
    const double step = terms[j].eps_step_start - next;
    const double wt = omega * terms[j].relaxation_time;
    const double denom = 1.0 + wt * wt;
    re += step / denom;
    im += step * wt / denom;
  }
  return {re, im};
}

OpticalIndex permittivity_to_index(const ComplexPermittivity& eps) {
  // Same values as sqrt((|eps| +- eps')/2), without the cancellation those
  // forms suffer when eps' < 0.
  const auto n = std::sqrt(eps.value());
  return {n.real(), std::abs(n.imag())};
}

ComplexPermittivity index_to_permittivity(const OpticalIndex& idx) {
  return {idx.n_real * idx.n_real - idx.n_imag * idx.n_imag,
          2.0 * idx.n_real * idx.n_imag};
}

double absorption_index_from_alpha(double alpha, double lambda0) {
  if (alpha < 0.0 || !(lambda0 > 0.0)) {
    throw DomainError("absorption index needs alpha >= 0 and lambda0 > 0");
  }
  return alpha * lambda0 / (4.0 * kPi);
}

double conductivity(double eps_imag, double frequency) {
  if (!(frequency > 0.0)) {
    throw DomainError(
        fmt::format("frequency must be positive (got {})", frequency));
  }
  return eps_imag * 2.0 * kPi * frequency * kVacuumPermittivity;
}

std::optional<double> penetration_depth(double sigma, double frequency,
                                        double permeability) {
  if (!(frequency > 0.0) || sigma < 0.0 || !(permeability > 0.0)) {
    throw DomainError(
        "penetration depth needs sigma >= 0, frequency > 0, permeability > 0");
  }
  if (sigma == 0.0) return std::nullopt;
  const double omega = 2.0 * kPi * frequency;
  return 1.0 / std::sqrt(omega * permeability * sigma / 2.0);
}

ComplexPermittivity lookup_permittivity(const Material& material,
                                        double wavelength) {
  if (!(wavelength > 0.0)) {
    throw DomainError(
        fmt::format("wavelength must be positive (got {})", wavelength));
  }
  if (const auto* model = std::get_if<DebyeModel>(&material.source)) {
    return debye_permittivity(*model, kSpeedOfLight / wavelength);
  }
  const auto& curve = std::get<TabulatedCurve>(material.source);
  const auto& pts = curve.points();
  // Wavelengths derived as c / f can land an ulp outside a table edge.
  const double slack = 1e-12 * curve.max_wavelength();
  if (wavelength < curve.min_wavelength() - slack ||
      wavelength > curve.max_wavelength() + slack) {
    throw RangeError(fmt::format(
        "wavelength {:.6g} nm outside tabulated range [{:.6g}, {:.6g}] nm of '{}'",
        wavelength / kNm, curve.min_wavelength() / kNm,
        curve.max_wavelength() / kNm, material.name));
  }
  wavelength = std::clamp(wavelength, curve.min_wavelength(),
                          curve.max_wavelength());
  const auto upper = std::lower_bound(
      pts.begin(), pts.end(), wavelength,
      [](const TabulatedPoint& p, double w) { return p.wavelength < w; });
  if (upper->wavelength == wavelength) return upper->permittivity;
  const auto lower = std::prev(upper);
  const double t = (wavelength - lower->wavelength) /
                   (upper->wavelength - lower->wavelength);
  const auto& a = lower->permittivity;
  const auto& b = upper->permittivity;
  return {a.real_part + t * (b.real_part - a.real_part),
          a.imag_part + t * (b.imag_part - a.imag_part)};
}

}  // namespace thz
