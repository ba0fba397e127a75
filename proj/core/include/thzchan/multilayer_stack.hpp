#pragma once

// Plane-wave propagation through a stack of planar tissue layers between two
// half-spaces.
//
// Numbering: the incident half-space is medium 0, layers are 1..M, the exit
// half-space is M+1. Interface i separates media i-1 and i, so there are M+1
// interfaces and layer i sits between interfaces i and i+1.
//
// Three independent routes give the input reflection:
//   composite_reflection  backward Mobius recursion over interface rho_i
//   field_transfer        2x2 field matrices, Gamma = E_{1,-} / E_{1,+}
//   equivalent_impedance  wave-impedance recursion, Gamma = (Z - eta)/(Z + eta)
//
// Oblique incidence uses transverse quantities: n_T = n cos t (TE) or
// n / cos t (TM), eta = eta0 / n_T, rho_i = (n_T,i-1 - n_T,i)/(n_T,i-1 + n_T,i).
// At normal incidence this is (n_{i-1} - n_i)/(n_{i-1} + n_i) for both
// polarizations. Note the TM sign is opposite to fresnel_reflection's printed
// R(TM); TE amplitudes agree.

#include <complex>
#include <string>
#include <variant>
#include <vector>

#include "thzchan/interface_reflection.hpp"
#include "thzchan/tissue_dielectrics.hpp"

namespace thz {

/// Either a fixed complex index (n - j kappa) or a dispersive material.
using IndexSource = std::variant<std::complex<double>, Material>;

std::complex<double> index_at(const IndexSource& source, double frequency);

struct Layer {
  IndexSource medium;
  double thickness;  // meters, > 0
  std::string label;
};

struct LayerStack {
  IndexSource incident;
  std::vector<Layer> layers;
  IndexSource exit;
  std::string incident_label;
  std::string exit_label;

  /// Swaps the half-spaces and reverses the layer order.
  LayerStack reversed() const;
};

struct IncidenceSpec {
  double frequency;  // Hz
  double angle = 0.0;  // radians, in the incident half-space
  Polarization polarization = Polarization::te;
};

inline constexpr double kDefaultFatThickness = 1.25e-3;
inline constexpr double kDefaultSkinThickness = 1.0e-3;

struct InterfaceFields {
  std::complex<double> forward;   // E_{i,+}
  std::complex<double> backward;  // E_{i,-}
};

struct FieldProfile {
  /// Left-side fields at interfaces 1..M+1 (element k is interface k+1),
  /// normalized to a unit transmitted field in the exit half-space.
  std::vector<InterfaceFields> interfaces;
  /// Transverse index of the incident and exit half-spaces.
  std::complex<double> incident_transverse_index;
  std::complex<double> exit_transverse_index;

  std::complex<double> reflection() const;
  /// Poynting-flux fraction delivered into the exit half-space.
  double transmitted_fraction() const;
};

struct StackResponse {
  double frequency = 0.0;
  std::complex<double> gamma;
  double reflect_percent = 0.0;
  double transmit_percent = 0.0;
  double non_reflected_percent = 0.0;  // 100 (1 - |gamma|^2)
  std::complex<double> z_equiv;
  double resistance = 0.0;
  double reactance = 0.0;
};

/// delta = (2 pi / lambda0) * thickness * (n cos t), where `n_cos_theta` is
/// the (possibly complex) product n_i cos t_i inside the layer.
std::complex<double> phase_thickness(double thickness, double lambda0,
                                     std::complex<double> n_cos_theta);
/// Same, from the layer index and the (real) propagation angle in the layer.
std::complex<double> phase_thickness(std::complex<double> index,
                                     double thickness, double lambda0,
                                     double theta_in_layer);

/// Transverse interface coefficient for a wave arriving from `n_prev` at
/// angle `theta_prev`.
std::complex<double> interface_rho(std::complex<double> n_prev,
                                   std::complex<double> n_next,
                                   double theta_prev, Polarization pol);

std::complex<double> composite_reflection(const LayerStack& stack,
                                          const IncidenceSpec& inc);
FieldProfile field_transfer(const LayerStack& stack, const IncidenceSpec& inc);
std::complex<double> equivalent_impedance(const LayerStack& stack,
                                          const IncidenceSpec& inc);
/// Transverse wave impedance of the incident half-space.
std::complex<double> incident_impedance(const LayerStack& stack,
                                        const IncidenceSpec& inc);

StackResponse stack_response(const LayerStack& stack, const IncidenceSpec& inc);

std::vector<StackResponse> frequency_sweep(const LayerStack& stack,
                                           const std::vector<double>& f_grid,
                                           double angle, Polarization pol);

}  // namespace thz
