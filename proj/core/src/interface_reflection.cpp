#include "thzchan/interface_reflection.hpp"

#include <boost/math/tools/minima.hpp>
#include <cmath>
#include <fmt/format.h>

#include "thzchan/constants.hpp"
#include "thzchan/error.hpp"

namespace thz {

namespace {

constexpr double kHalfPi = kPi / 2.0;

bool is_grazing(double theta) { return std::abs(theta - kHalfPi) < 1e-15; }

void require_real_positive(const InterfaceSpec& iface) {
  if (!(iface.n1.real() > 0.0 && iface.n2.real() > 0.0)) {
    throw DomainError("refractive indices need positive real parts");
  }
}

}  // namespace

std::complex<double> decaying_sqrt(std::complex<double> z) {
  const auto s = std::sqrt(z);
  return s.imag() > 0.0 ? -s : s;
}

PolarizedReflection fresnel_reflection(const InterfaceSpec& iface,
                                       double theta, Polarization pol) {
  require_real_positive(iface);
  if (!(theta >= 0.0 && theta < kHalfPi)) {
    throw DomainError(
        fmt::format("incidence angle must be in [0, pi/2) (got {})", theta));
  }
  const auto n21 = iface.n21();
  // Printed form scaled by n1: cos t -> n1 cos t and s -> n2 cos t2, both
  // taken on the decaying branch. This keeps the transmitted wave decaying
  // for a lossy incidence medium and gives r = 0 exactly when n1 == n2.
  const auto kx = iface.n1 * std::sin(theta);
  const auto a = decaying_sqrt(iface.n1 * iface.n1 - kx * kx);
  const auto root = decaying_sqrt(iface.n2 * iface.n2 - kx * kx);
  const std::complex<double> lead = pol == Polarization::te ? a : n21 * n21 * a;
  const auto r = (lead - root) / (lead + root);
  return {pol, r, std::norm(r)};
}

BrewsterAngle brewster_angle(const InterfaceSpec& iface) {
  require_real_positive(iface);
  if (iface.lossless()) {
    const double angle = std::atan(iface.n2.real() / iface.n1.real());
    return {angle, true,
            std::abs(fresnel_reflection(iface, angle, Polarization::tm)
                         .amplitude)};
  }
  const auto magnitude = [&](double t) {
    return std::abs(fresnel_reflection(iface, t, Polarization::tm).amplitude);
  };
  // Seed the bracket from the real-part estimate, then refine with Brent.
  const double guess = std::atan(iface.n2.real() / iface.n1.real());
  const double lo = std::max(0.0, guess - 0.5);
  const double hi = std::min(kHalfPi * (1.0 - 1e-12), guess + 0.5);
  const auto [angle, value] =
      boost::math::tools::brent_find_minima(magnitude, lo, hi, 52);
  return {angle, false, value};
}

std::optional<double> critical_angle(const InterfaceSpec& iface) {
  require_real_positive(iface);
  if (!iface.lossless()) {
    throw DomainError("critical angle is defined for real indices only");
  }
  const double n1 = iface.n1.real();
  const double n2 = iface.n2.real();
  if (!(n1 > n2)) return std::nullopt;
  return std::asin(n2 / n1);
}

std::vector<ReflectanceSample> reflectance_sweep(
    const InterfaceSpec& iface, const std::vector<double>& theta_grid,
    Polarization pol) {
  std::vector<ReflectanceSample> out;
  out.reserve(theta_grid.size());
  for (std::size_t i = 0; i < theta_grid.size(); ++i) {
    const double theta = theta_grid[i];
    if (i > 0 && theta < theta_grid[i - 1]) {
      throw DomainError("angle grid must be sorted");
    }
    if (is_grazing(theta)) {
      out.push_back({theta, 1.0});
      continue;
    }
    out.push_back(
        {theta, std::abs(fresnel_reflection(iface, theta, pol).amplitude)});
  }
  return out;
}

std::vector<double> default_angle_grid() {
  std::vector<double> grid;
  for (int deg = 0; deg < 90; ++deg) grid.push_back(deg_to_rad(deg));
  return grid;
}

std::vector<double> appendix_angle_grid() {
  auto grid = default_angle_grid();
  grid.push_back(kHalfPi);
  return grid;
}

}  // namespace thz
