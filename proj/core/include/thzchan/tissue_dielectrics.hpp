#pragma once

// Tissue dielectric properties: Debye relaxation models, tabulated optical
// permittivity, and the conversions between permittivity, refractive index,
// conductivity and penetration depth.
//
// Sign convention throughout the library: time dependence e^{+jwt}, so a
// passive medium has eps = eps' - j eps'' and n~ = n - j kappa with eps'' >= 0
// and kappa >= 0. Both are stored as positive magnitudes here; use
// ComplexPermittivity::value() / OpticalIndex::value() for the complex form.

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "thzchan/constants.hpp"

namespace thz {

struct ComplexPermittivity {
  double real_part = 1.0;
  double imag_part = 0.0;  // eps'' (loss), non-negative for passive media

  std::complex<double> value() const { return {real_part, -imag_part}; }
  double magnitude() const;
};

struct OpticalIndex {
  double n_real = 1.0;
  double n_imag = 0.0;  // kappa, non-negative for passive media

  std::complex<double> value() const { return {n_real, -n_imag}; }
};

/// One relaxation step of a multi-term Debye sum. The step runs from
/// `eps_step_start` down to the next term's start (or eps_inf for the last).
struct DebyeTerm {
  double eps_step_start;
  double relaxation_time;  // seconds
};

class DebyeModel {
 public:
  /// Throws DomainError if eps_inf < 1, a relaxation time is not positive,
  /// or the term list is empty.
  DebyeModel(double eps_inf, std::vector<DebyeTerm> terms);

  /// Double-Debye convenience: eps_s (a.k.a. eps_1), eps_2, tau1, tau2.
  static DebyeModel double_debye(double eps_inf, double eps_s, double eps_2,
                                 double tau1, double tau2);

  double eps_inf() const { return eps_inf_; }
  double eps_static() const { return terms_.front().eps_step_start; }
  const std::vector<DebyeTerm>& terms() const { return terms_; }

 private:
  double eps_inf_;
  std::vector<DebyeTerm> terms_;
};

struct TabulatedPoint {
  double wavelength;  // meters
  ComplexPermittivity permittivity;
};

class TabulatedCurve {
 public:
  /// Requires at least two points with strictly increasing wavelength.
  explicit TabulatedCurve(std::vector<TabulatedPoint> points);

  const std::vector<TabulatedPoint>& points() const { return points_; }
  double min_wavelength() const { return points_.front().wavelength; }
  double max_wavelength() const { return points_.back().wavelength; }

 private:
  std::vector<TabulatedPoint> points_;
};

struct Material {
  std::string name;
  std::variant<DebyeModel, TabulatedCurve> source;
  std::string provenance;

  bool is_debye() const { return std::holds_alternative<DebyeModel>(source); }
};

/// Immutable named collection of materials.
class MaterialLibrary {
 public:
  MaterialLibrary(std::string set_name, std::vector<Material> materials);

  /// Built-in sets: "table" (water, whole_blood, skin), "appendix"
  /// (whole_blood, blood_plasma, water, skin_dermis, skin_epidermis) and
  /// "optical" (tabulated fat, hemoglobin, water, 450-1000 nm).
  static const MaterialLibrary& builtin(const std::string& set_name);
  static std::vector<std::string> builtin_set_names();

  const std::string& set_name() const { return set_name_; }
  bool contains(const std::string& name) const;
  /// Throws ResolutionError listing the available names.
  const Material& at(const std::string& name) const;
  std::vector<std::string> names() const;

 private:
  std::string set_name_;
  std::map<std::string, Material> materials_;
};

ComplexPermittivity debye_permittivity(const DebyeModel& model,
                                       double frequency);

OpticalIndex permittivity_to_index(const ComplexPermittivity& eps);
ComplexPermittivity index_to_permittivity(const OpticalIndex& idx);

/// n_i = alpha * lambda0 / (4 pi), the inverse of the absorption coefficient.
double absorption_index_from_alpha(double alpha, double lambda0);

/// sigma = eps'' * 2 pi f * eps0.
double conductivity(double eps_imag, double frequency);

/// Good-conductor skin depth 1/sqrt(w mu sigma / 2). Returns nullopt for a
/// non-absorbing medium (sigma == 0), whose depth is unbounded.
std::optional<double> penetration_depth(
    double sigma, double frequency,
    double permeability = kTissuePermeability);

/// Exact at grid points, linear in eps' and eps'' between them; Debye
/// materials are evaluated at f = c / wavelength. Throws RangeError outside
/// the tabulated interval.
ComplexPermittivity lookup_permittivity(const Material& material,
                                        double wavelength);

inline double frequency_to_wavelength(double frequency) {
  return kSpeedOfLight / frequency;
}

}  // namespace thz
