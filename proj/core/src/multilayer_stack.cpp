#include "thzchan/multilayer_stack.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>

#include "thzchan/constants.hpp"
#include "thzchan/error.hpp"

namespace thz {

namespace {

using cplx = std::complex<double>;
constexpr cplx kJ{0.0, 1.0};

// Indices and transverse quantities of one stack at one frequency/angle.
struct Resolved {
  std::vector<cplx> n;            // media 0..M+1
  std::vector<cplx> n_cos;        // n_i cos t_i, media 0..M+1
  std::vector<cplx> transverse;   // n_T, media 0..M+1
  std::vector<cplx> rho;          // interfaces 1..M+1 stored at [0..M]
  std::vector<cplx> delta;        // layers 1..M stored at [0..M-1]
};

cplx transverse_index(cplx n, cplx n_cos, Polarization pol) {
  return pol == Polarization::te ? n_cos : n * n / n_cos;
}

void check_incidence(const IncidenceSpec& inc) {
  if (!(inc.frequency > 0.0)) {
    throw DomainError(
        fmt::format("frequency must be positive (got {})", inc.frequency));
  }
  if (!(inc.angle >= 0.0 && inc.angle < kPi / 2.0)) {
    throw DomainError(
        fmt::format("incidence angle must be in [0, pi/2) (got {})", inc.angle));
  }
}

Resolved resolve(const LayerStack& stack, const IncidenceSpec& inc) {
  check_incidence(inc);
  Resolved r;
  r.n.push_back(index_at(stack.incident, inc.frequency));
  for (const auto& layer : stack.layers) {
    if (!(layer.thickness > 0.0)) {
      throw DomainError(fmt::format("layer '{}' thickness must be positive",
                                    layer.label));
    }
    r.n.push_back(index_at(layer.medium, inc.frequency));
  }
  r.n.push_back(index_at(stack.exit, inc.frequency));
  for (const auto& n : r.n) {
    if (!(n.real() > 0.0)) throw DomainError("indices need positive real parts");
  }

  // Snell invariant n sin t carried from the incident half-space.
  const cplx kx = r.n.front() * std::sin(inc.angle);
  for (const auto& n : r.n) {
    const auto nc = decaying_sqrt(n * n - kx * kx);
    r.n_cos.push_back(nc);
    r.transverse.push_back(transverse_index(n, nc, inc.polarization));
  }
  for (std::size_t i = 1; i < r.n.size(); ++i) {
    const auto a = r.transverse[i - 1];
    const auto b = r.transverse[i];
    r.rho.push_back((a - b) / (a + b));
  }
  const double lambda0 = kSpeedOfLight / inc.frequency;
  for (std::size_t i = 0; i < stack.layers.size(); ++i) {
    r.delta.push_back(
        phase_thickness(stack.layers[i].thickness, lambda0, r.n_cos[i + 1]));
  }
  return r;
}

}  // namespace

std::complex<double> index_at(const IndexSource& source, double frequency) {
  if (const auto* fixed = std::get_if<cplx>(&source)) return *fixed;
  const auto& material = std::get<Material>(source);
  return permittivity_to_index(
             lookup_permittivity(material, kSpeedOfLight / frequency))
      .value();
}

LayerStack LayerStack::reversed() const {
  LayerStack out{exit, {layers.rbegin(), layers.rend()}, incident, exit_label,
                 incident_label};
  return out;
}

std::complex<double> FieldProfile::reflection() const {
  return interfaces.front().backward / interfaces.front().forward;
}

double FieldProfile::transmitted_fraction() const {
  // Unit transmitted transverse field; flux ~ |E|^2 Re(n_T) / (2 eta0).
  const double incident_flux = std::norm(interfaces.front().forward) *
                               incident_transverse_index.real();
  return exit_transverse_index.real() / incident_flux;
}

std::complex<double> phase_thickness(double thickness, double lambda0,
                                     std::complex<double> n_cos_theta) {
  if (thickness < 0.0 || !(lambda0 > 0.0)) {
    throw DomainError("phase thickness needs thickness >= 0 and lambda0 > 0");
  }
  return 2.0 * kPi / lambda0 * thickness * n_cos_theta;
}

std::complex<double> phase_thickness(std::complex<double> index,
                                     double thickness, double lambda0,
                                     double theta_in_layer) {
  return phase_thickness(thickness, lambda0, index * std::cos(theta_in_layer));
}

std::complex<double> interface_rho(std::complex<double> n_prev,
                                   std::complex<double> n_next,
                                   double theta_prev, Polarization pol) {
  const cplx kx = n_prev * std::sin(theta_prev);
  const auto a = transverse_index(n_prev, decaying_sqrt(n_prev * n_prev - kx * kx), pol);
  const auto b = transverse_index(n_next, decaying_sqrt(n_next * n_next - kx * kx), pol);
  return (a - b) / (a + b);
}

std::complex<double> composite_reflection(const LayerStack& stack,
                                          const IncidenceSpec& inc) {
  const auto r = resolve(stack, inc);
  cplx gamma = r.rho.back();
  for (std::size_t k = r.delta.size(); k-- > 0;) {
    const auto z = gamma * std::exp(-2.0 * kJ * r.delta[k]);
    gamma = (r.rho[k] + z) / (1.0 + r.rho[k] * z);
  }
  return gamma;
}

FieldProfile field_transfer(const LayerStack& stack, const IncidenceSpec& inc) {
  const auto r = resolve(stack, inc);
  const std::size_t m = r.delta.size();

  const auto match = [&](std::size_t k, cplx fwd, cplx bwd) {
    const auto rho = r.rho[k];
    const auto tau = 1.0 + rho;
    return InterfaceFields{(fwd + rho * bwd) / tau, (rho * fwd + bwd) / tau};
  };

  std::vector<InterfaceFields> fields(m + 1);
  fields[m] = match(m, 1.0, 0.0);
  for (std::size_t k = m; k-- > 0;) {
    const auto e = std::exp(kJ * r.delta[k]);
    fields[k] = match(k, fields[k + 1].forward * e, fields[k + 1].backward / e);
  }
  return {std::move(fields), r.transverse.front(), r.transverse.back()};
}

std::complex<double> incident_impedance(const LayerStack& stack,
                                        const IncidenceSpec& inc) {
  const auto r = resolve(stack, inc);
  return kFreeSpaceImpedance / r.transverse.front();
}

std::complex<double> equivalent_impedance(const LayerStack& stack,
                                          const IncidenceSpec& inc) {
  const auto r = resolve(stack, inc);
  cplx z = kFreeSpaceImpedance / r.transverse.back();
  for (std::size_t k = r.delta.size(); k-- > 0;) {
    const auto eta = kFreeSpaceImpedance / r.transverse[k + 1];
    const auto t = std::tan(r.delta[k]);
    z = eta * (z + kJ * eta * t) / (eta + kJ * z * t);
  }
  return z;
}

StackResponse stack_response(const LayerStack& stack, const IncidenceSpec& inc) {
  StackResponse out;
  out.frequency = inc.frequency;
  out.gamma = composite_reflection(stack, inc);
  const double reflected = std::norm(out.gamma);
  out.reflect_percent = 100.0 * reflected;
  out.non_reflected_percent = 100.0 * (1.0 - reflected);
  out.transmit_percent = 100.0 * field_transfer(stack, inc).transmitted_fraction();
  out.z_equiv = equivalent_impedance(stack, inc);
  out.resistance = out.z_equiv.real();
  out.reactance = out.z_equiv.imag();
  return out;
}

std::vector<StackResponse> frequency_sweep(const LayerStack& stack,
                                           const std::vector<double>& f_grid,
                                           double angle, Polarization pol) {
  if (!std::is_sorted(f_grid.begin(), f_grid.end())) {
    throw DomainError("frequency grid must be sorted");
  }
  std::vector<StackResponse> out;
  out.reserve(f_grid.size());
  for (const double f : f_grid) {
    out.push_back(stack_response(stack, {f, angle, pol}));
  }
  return out;
}

}  // namespace thz
