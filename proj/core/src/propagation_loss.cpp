#include "thzchan/propagation_loss.hpp"

#include <cmath>
#include <fmt/format.h>
#include <numbers>

#include "thzchan/error.hpp"

namespace thz {

namespace {

constexpr double kLog10e = std::numbers::log10e;

void require_positive(double v, const char* what) {
  if (!(v > 0.0)) {
    throw DomainError(fmt::format("{} must be positive (got {})", what, v));
  }
}

void require_half_width(double half_width) {
  if (!(half_width > 0.0 && half_width <= kPi)) {
    throw DomainError(
        fmt::format("beam half-width must be in (0, pi] (got {})", half_width));
  }
}

}  // namespace

void validate(const PropagationMedium& medium) {
  double total_fraction = 0.0;
  for (const auto& p : medium.particles) {
    if (!(p.radius > 0.0)) {
      throw DomainError(fmt::format("population '{}': radius must be positive",
                                    p.name));
    }
    if (!(p.volume_fraction >= 0.0 && p.volume_fraction <= 1.0)) {
      throw DomainError(fmt::format(
          "population '{}': volume fraction must be in [0, 1]", p.name));
    }
    if (p.absorption_efficiency < 0.0) {
      throw DomainError(
          fmt::format("population '{}': q_abs must be >= 0", p.name));
    }
    total_fraction += p.volume_fraction;
  }
  if (total_fraction > 1.0) {
    throw DomainError(fmt::format(
        "particle volume fractions sum to {} > 1", total_fraction));
  }
}

double wavelength_in_medium(double lambda0, double n_real) {
  require_positive(lambda0, "lambda0");
  require_positive(n_real, "n_real");
  return lambda0 / n_real;
}

double spreading_loss_db(double lambda_g, double distance) {
  require_positive(lambda_g, "lambda_g");
  require_positive(distance, "distance");
  return -20.0 * std::log10(lambda_g / (4.0 * kPi * distance));
}

double solid_angle_cone(double half_width) {
  require_half_width(half_width);
  return 2.0 * kPi * (1.0 - std::cos(half_width));
}

double solid_angle_gaussian(double half_width) {
  require_half_width(half_width);
  const double c = std::cos(half_width);
  return kPi / 2.0 * (7.0 / 3.0 - (c + c * c + c * c * c / 3.0));
}

double solid_angle(const Beam& beam) {
  switch (beam.kind) {
    case Beam::Kind::isotropic:
      return 4.0 * kPi;
    case Beam::Kind::cone:
      return solid_angle_cone(beam.half_width);
    case Beam::Kind::gaussian:
      return solid_angle_gaussian(beam.half_width);
  }
  return 4.0 * kPi;
}

double directivity(double solid_angle) {
  if (!(solid_angle > 0.0 && solid_angle <= 4.0 * kPi * (1.0 + 1e-15))) {
    throw DomainError(
        fmt::format("solid angle must be in (0, 4 pi] (got {})", solid_angle));
  }
  return 4.0 * kPi / solid_angle;
}

double directivity(const Beam& beam) {
  if (beam.kind == Beam::Kind::isotropic) return 1.0;
  return directivity(solid_angle(beam));
}

double absorption_coefficient(double kappa, double lambda) {
  if (kappa < 0.0) throw DomainError("kappa must be >= 0");
  require_positive(lambda, "wavelength");
  return 4.0 * kPi * kappa / lambda;
}

double absorption_loss_db(double mu_abs, double distance) {
  if (distance < 0.0) throw DomainError("distance must be >= 0");
  return 10.0 * mu_abs * distance * kLog10e;
}

double particle_concentration(double volume_fraction, double radius) {
  require_positive(radius, "radius");
  return volume_fraction / (4.0 / 3.0 * kPi * radius * radius * radius);
}

double particle_absorption_coefficient(double rho_v, double q_abs,
                                       double sigma_g) {
  if (rho_v < 0.0 || q_abs < 0.0 || sigma_g < 0.0) {
    throw DomainError("particle absorption inputs must be >= 0");
  }
  return rho_v * q_abs * sigma_g;
}

double geometric_cross_section(double radius) {
  require_positive(radius, "radius");
  return kPi * radius * radius;
}

double size_parameter(double radius, double lambda_g) {
  require_positive(radius, "radius");
  require_positive(lambda_g, "lambda_g");
  return 2.0 * kPi * radius / lambda_g;
}

double scattering_efficiency_small(double psi,
                                   std::complex<double> rel_index) {
  require_positive(psi, "size parameter");
  const auto n2 = rel_index * rel_index;
  const auto lorentz_lorenz = (n2 - 1.0) / (n2 + 2.0);
  const double psi2 = psi * psi;
  return 8.0 / 3.0 * psi2 * psi2 * (lorentz_lorenz * lorentz_lorenz).real();
}

double phase_shift_parameter(double rel_index_real, double psi) {
  return 2.0 * (rel_index_real - 1.0) * psi;
}

double extinction_efficiency(double p) {
  if (p < 0.0) throw DomainError("phase shift parameter must be >= 0");
  if (p < 1e-3) {
    // Taylor series; the closed form cancels catastrophically here.
    const double p2 = p * p;
    return p2 / 2.0 - p2 * p2 / 36.0 + p2 * p2 * p2 / 1440.0;
  }
  return 2.0 - 4.0 / p * std::sin(p) + 4.0 / (p * p) * (1.0 - std::cos(p));
}

LargeScattering scattering_efficiency_large(double q_ext, double q_abs) {
  if (q_ext < 0.0 || q_abs < 0.0) {
    throw DomainError("efficiencies must be >= 0");
  }
  const double diff = q_ext - q_abs;
  if (diff >= 0.0) return {diff, false};
  if (diff > -1e-9) return {0.0, true};
  throw DomainError(fmt::format(
      "q_abs ({}) exceeds q_ext ({}): inconsistent particle model", q_abs,
      q_ext));
}

double scattering_coefficient(const ParticlePopulation& population,
                              double lambda_g) {
  if (population.volume_fraction == 0.0) return 0.0;
  const double psi = size_parameter(population.radius, lambda_g);
  auto cls = population.size_class;
  if (cls == SizeClass::automatic) {
    cls = psi < 1.0 ? SizeClass::small : SizeClass::large;
  }
  double q_sca = 0.0;
  if (cls == SizeClass::small) {
    q_sca = scattering_efficiency_small(psi, population.relative_index);
  } else {
    // Q_ext is even in p, so a particle optically thinner than its host uses |p|.
    const double p = std::abs(
        phase_shift_parameter(population.relative_index.real(), psi));
    q_sca = scattering_efficiency_large(extinction_efficiency(p),
                                        population.absorption_efficiency)
                .efficiency;
  }
  const double rho_v =
      particle_concentration(population.volume_fraction, population.radius);
  return rho_v * q_sca * geometric_cross_section(population.radius);
}

double scattering_loss_db(const PropagationMedium& medium, double lambda_g,
                          double distance) {
  if (distance < 0.0) throw DomainError("distance must be >= 0");
  double mu = 0.0;
  for (const auto& p : medium.particles) {
    mu += scattering_coefficient(p, lambda_g);
  }
  return 10.0 * mu * distance * kLog10e;
}

double scattered_intensity(double i_inc, double k, double r,
                           double amplitude_value) {
  require_positive(k, "wavenumber");
  require_positive(r, "range");
  const double kr = k * r;
  return i_inc * amplitude_value / (kr * kr);
}

FieldRegime far_field_check(double distance, double lambda, double threshold) {
  require_positive(distance, "distance");
  require_positive(lambda, "wavelength");
  return 2.0 * kPi / lambda * distance >= threshold ? FieldRegime::far
                                                    : FieldRegime::near;
}

PathLossBreakdown total_path_loss(const PropagationMedium& medium,
                                  double frequency, double distance,
                                  const Beam& beam) {
  require_positive(frequency, "frequency");
  require_positive(distance, "distance");
  validate(medium);

  const double lambda0 = frequency_to_wavelength(frequency);
  const auto index =
      permittivity_to_index(lookup_permittivity(medium.host, lambda0));
  const double lambda_g = wavelength_in_medium(lambda0, index.n_real);

  PathLossBreakdown out;
  out.wavelength_in_medium = lambda_g;
  out.spread_db = spreading_loss_db(lambda_g, distance);
  out.absorption_db = absorption_loss_db(
      absorption_coefficient(index.n_imag, lambda0), distance);
  out.scattering_db = scattering_loss_db(medium, lambda_g, distance);
  out.total_db = out.spread_db + out.absorption_db + out.scattering_db;
  out.l_spr = std::pow(10.0, -out.spread_db / 10.0);
  out.l_abs = std::pow(10.0, -out.absorption_db / 10.0);
  out.l_sca = std::pow(10.0, -out.scattering_db / 10.0);
  out.directivity = directivity(beam);
  out.regime = far_field_check(distance, lambda0);
  return out;
}

}  // namespace thz
