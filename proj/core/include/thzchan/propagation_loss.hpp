#pragma once

// Path loss of a wave crossing a particle-laden tissue: geometric spreading,
// Beer-Lambert molecular absorption, and particle scattering (Rayleigh for
// small scatterers, anomalous diffraction for large ones).
//
// All linear loss factors are transmitted-power fractions in (0, 1]; the dB
// figures are their negated logarithms. Spreading may be negative in the
// near field and is never clamped.

#include <complex>
#include <string>
#include <vector>

#include "thzchan/tissue_dielectrics.hpp"

namespace thz {

struct Beam {
  enum class Kind { isotropic, cone, gaussian };
  Kind kind = Kind::isotropic;
  double half_width = kPi;  // radians, ignored for isotropic

  static Beam isotropic() { return {}; }
  static Beam cone(double half_width) { return {Kind::cone, half_width}; }
  static Beam gaussian(double half_width) {
    return {Kind::gaussian, half_width};
  }
};

enum class SizeClass { small, large, automatic };

struct ParticlePopulation {
  std::string name;
  double radius = 0.0;           // meters
  double volume_fraction = 0.0;  // [0, 1]
  std::complex<double> relative_index{1.0, 0.0};
  double absorption_efficiency = 0.0;  // Q_abs, large-particle route only
  SizeClass size_class = SizeClass::large;
};

struct PropagationMedium {
  Material host;
  std::vector<ParticlePopulation> particles;
};

/// Throws DomainError when a radius is not positive, a fraction is outside
/// [0, 1], or the fractions sum past 1.
void validate(const PropagationMedium& medium);

enum class FieldRegime { near, far };

struct PathLossBreakdown {
  double spread_db = 0.0;
  double absorption_db = 0.0;
  double scattering_db = 0.0;
  double total_db = 0.0;
  double l_spr = 1.0;
  double l_abs = 1.0;
  double l_sca = 1.0;
  double directivity = 1.0;  // reported, not folded into total_db
  FieldRegime regime = FieldRegime::far;
  double wavelength_in_medium = 0.0;
};

double wavelength_in_medium(double lambda0, double n_real);

double spreading_loss_db(double lambda_g, double distance);

double solid_angle_cone(double half_width);
/// (pi/2) [7/3 - (c + c^2 + c^3/3)], c = cos(half_width): the solid angle of
/// the (1 + cos)^2 / 4 power pattern truncated at half_width.
double solid_angle_gaussian(double half_width);
double solid_angle(const Beam& beam);

double directivity(double solid_angle);
double directivity(const Beam& beam);

/// mu_abs = 4 pi kappa / lambda. Callers pass the free-space wavelength.
double absorption_coefficient(double kappa, double lambda);
double absorption_loss_db(double mu_abs, double distance);

double particle_concentration(double volume_fraction, double radius);
double particle_absorption_coefficient(double rho_v, double q_abs,
                                       double sigma_g);
double geometric_cross_section(double radius);

double size_parameter(double radius, double lambda_g);
double scattering_efficiency_small(double psi,
                                   std::complex<double> rel_index);
double phase_shift_parameter(double rel_index_real, double psi);
double extinction_efficiency(double p);

struct LargeScattering {
  double efficiency = 0.0;
  bool clamped = false;  // q_abs exceeded q_ext by less than 1e-9
};
LargeScattering scattering_efficiency_large(double q_ext, double q_abs);

/// Scattering coefficient mu_sca (1/m) of one population.
double scattering_coefficient(const ParticlePopulation& population,
                              double lambda_g);
double scattering_loss_db(const PropagationMedium& medium, double lambda_g,
                          double distance);

double scattered_intensity(double i_inc, double k, double r,
                           double amplitude_value);

inline constexpr double kDefaultFarFieldThreshold = 10.0;
FieldRegime far_field_check(double distance, double lambda,
                            double threshold = kDefaultFarFieldThreshold);

PathLossBreakdown total_path_loss(const PropagationMedium& medium,
                                  double frequency, double distance,
                                  const Beam& beam = Beam::isotropic());

}  // namespace thz
