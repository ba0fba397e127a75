#pragma once

// Single planar interface: Fresnel TE/TM reflection, Brewster and critical
// angles, and angle sweeps.
//
// Polarization naming: TE is perpendicular (s), TM is parallel (p). The
// amplitudes follow the printed forms
//   r_TE = (cos t - s) / (cos t + s),  r_TM = (n21^2 cos t - s) / (n21^2 cos t + s)
// with s = sqrt(n21^2 - sin^2 t), n21 = n2 / n1, taking the root with
// Im s <= 0 (decaying transmitted wave under e^{+jwt}).

#include <complex>
#include <optional>
#include <vector>

#include "thzchan/constants.hpp"

namespace thz {

enum class Polarization { te, tm };

struct InterfaceSpec {
  std::complex<double> n1;  // incidence medium, n - j kappa
  std::complex<double> n2;  // transmission medium

  std::complex<double> n21() const { return n2 / n1; }
  bool lossless() const { return n1.imag() == 0.0 && n2.imag() == 0.0; }
  InterfaceSpec swapped() const { return {n2, n1}; }
};

struct PolarizedReflection {
  Polarization polarization;
  std::complex<double> amplitude;
  double power;  // |amplitude|^2
};

/// sqrt on the branch with Im <= 0 (and Re >= 0 for passive arguments).
std::complex<double> decaying_sqrt(std::complex<double> z);

/// Domain 0 <= theta < pi/2; throws DomainError otherwise.
PolarizedReflection fresnel_reflection(const InterfaceSpec& iface,
                                       double theta, Polarization pol);

struct BrewsterAngle {
  double angle;       // radians
  bool exact;         // false for lossy media: location of min |r_TM|
  double residual;    // |r_TM| at `angle`
};

BrewsterAngle brewster_angle(const InterfaceSpec& iface);

/// arcsin(n2/n1) when n1 > n2, nullopt otherwise. Requires real indices.
std::optional<double> critical_angle(const InterfaceSpec& iface);

struct ReflectanceSample {
  double theta;
  double magnitude;
};

/// One row per angle. An angle of exactly pi/2 is accepted here and returns
/// the grazing limit |r| = 1.
std::vector<ReflectanceSample> reflectance_sweep(
    const InterfaceSpec& iface, const std::vector<double>& theta_grid,
    Polarization pol);

/// 0, 1, ..., 89 degrees in radians.
std::vector<double> default_angle_grid();
/// 0, 1, ..., 90 degrees in radians (integer-degree compatibility grid).
std::vector<double> appendix_angle_grid();

inline double deg_to_rad(double deg) { return deg * kPi / 180.0; }
inline double rad_to_deg(double rad) { return rad * 180.0 / kPi; }

}  // namespace thz
