#include <gtest/gtest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>

#include "thzchan/error.hpp"
#include "thzchan/population_file.hpp"
#include "thzchan/propagation_loss.hpp"

using namespace thz;

namespace {

const std::filesystem::path kData{THZCHAN_DATA_DIR};

// mpmath reference values for the blood / 1 THz chain.
constexpr double kBloodLambdaG = 1.56949347381119e-4;
constexpr double kBloodMuAbs = 23672.4134556506;

const Material& table_blood() { return MaterialLibrary::builtin("table").at("whole_blood"); }

ParticlePopulation population(double radius, double fraction, double rel_index,
                              SizeClass cls, double q_abs = 0.0) {
  return {"p", radius, fraction, {rel_index, 0.0}, q_abs, cls};
}

double gaussian_pattern_quadrature(double half_width) {
  const auto f = [](double t) {
    const double g = 0.5 * (1.0 + std::cos(t));
    return g * g * std::sin(t);
  };
  return 2.0 * kPi *
         boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, 0.0, half_width, 15, 1e-15);
}

}  // namespace

TEST(WavelengthInMedium, Cases) {
  EXPECT_DOUBLE_EQ(wavelength_in_medium(3e-4, 1.0), 3e-4);
  EXPECT_DOUBLE_EQ(wavelength_in_medium(300e-6, 2.0), 150e-6);
  const auto n = permittivity_to_index(lookup_permittivity(table_blood(), 3e-4));
  EXPECT_NEAR(wavelength_in_medium(3e-4, n.n_real), kBloodLambdaG, 1e-16);
  EXPECT_THROW(wavelength_in_medium(3e-4, 0.0), DomainError);
  EXPECT_THROW(wavelength_in_medium(0.0, 1.0), DomainError);
}

TEST(SpreadingLoss, Cases) {
  const double lg = 157e-6;
  EXPECT_NEAR(spreading_loss_db(lg, lg / (4.0 * kPi)), 0.0, 1e-12);
  EXPECT_NEAR(spreading_loss_db(lg, 2e-3) - spreading_loss_db(lg, 1e-3),
              20.0 * std::log10(2.0), 1e-12);
  EXPECT_NEAR(spreading_loss_db(lg, 1e-3), 38.0662042322573, 1e-10);
  // near field: negative, not clamped
  EXPECT_LT(spreading_loss_db(lg, lg / 100.0), 0.0);
  EXPECT_THROW(spreading_loss_db(lg, 0.0), DomainError);
}

TEST(SolidAngle, Cone) {
  EXPECT_NEAR(solid_angle_cone(kPi), 4.0 * kPi, 1e-14);
  EXPECT_NEAR(solid_angle_cone(kPi / 2.0), 2.0 * kPi, 1e-14);
  EXPECT_NEAR(solid_angle_cone(kPi / 6.0), 0.841787214476933, 1e-14);
  EXPECT_THROW(solid_angle_cone(0.0), DomainError);
  EXPECT_THROW(solid_angle_cone(4.0), DomainError);
}

TEST(SolidAngle, GaussianMatchesQuadrature) {
  EXPECT_NEAR(solid_angle_gaussian(kPi), 4.0 * kPi / 3.0, 1e-14);
  EXPECT_NEAR(solid_angle_gaussian(1e-9), 0.0, 1e-14);
  for (double w = 0.05; w <= kPi; w += 0.05) {
    EXPECT_NEAR(solid_angle_gaussian(w), gaussian_pattern_quadrature(w), 1e-10) << w;
  }
}

TEST(Directivity, Cases) {
  EXPECT_DOUBLE_EQ(directivity(4.0 * kPi), 1.0);
  EXPECT_DOUBLE_EQ(directivity(2.0 * kPi), 2.0);
  EXPECT_NEAR(directivity(Beam::gaussian(kPi)), 3.0, 1e-14);
  EXPECT_DOUBLE_EQ(directivity(Beam::isotropic()), 1.0);
  EXPECT_THROW(directivity(0.0), DomainError);
  EXPECT_THROW(directivity(13.0), DomainError);
}

TEST(Absorption, Coefficient) {
  EXPECT_DOUBLE_EQ(absorption_coefficient(0.0, 3e-4), 0.0);
  EXPECT_NEAR(absorption_coefficient(1.0, 4.0 * kPi), 1.0, 1e-15);
  const auto n = permittivity_to_index(lookup_permittivity(table_blood(), 3e-4));
  EXPECT_NEAR(absorption_coefficient(n.n_imag, 3e-4), kBloodMuAbs, 1e-8);
  EXPECT_THROW(absorption_coefficient(-0.1, 3e-4), DomainError);
}

TEST(Absorption, RoundTripWithAbsorptionIndex) {
  for (double alpha : {1.0, 250.0, 2.3e4}) {
    const double kappa = absorption_index_from_alpha(alpha, 3e-4);
    EXPECT_NEAR(absorption_coefficient(kappa, 3e-4), alpha, 1e-12 * alpha);
  }
}

TEST(Absorption, LossDb) {
  EXPECT_DOUBLE_EQ(absorption_loss_db(2.3e4, 0.0), 0.0);
  EXPECT_NEAR(absorption_loss_db(std::log(10.0), 1.0), 10.0, 1e-13);
  EXPECT_NEAR(absorption_loss_db(2.3e4, 1e-3), 10.0 * 23.0 * std::log10(std::exp(1.0)), 1e-12);
  EXPECT_THROW(absorption_loss_db(1.0, -1.0), DomainError);
}

TEST(Particles, Concentration) {
  EXPECT_NEAR(particle_concentration(4.0 * kPi / 3.0, 1.0), 1.0, 1e-15);
  EXPECT_DOUBLE_EQ(particle_concentration(0.0, 1.0), 0.0);
  EXPECT_NEAR(particle_concentration(0.45, 3.5e-6), 2.50564633439136e15, 1e3);
  EXPECT_THROW(particle_concentration(0.1, 0.0), DomainError);
}

TEST(Particles, AbsorptionCoefficient) {
  EXPECT_DOUBLE_EQ(particle_absorption_coefficient(5.0, 0.0, 2.0), 0.0);
  EXPECT_DOUBLE_EQ(particle_absorption_coefficient(1.0, 1.0, 1.0), 1.0);
  EXPECT_DOUBLE_EQ(particle_absorption_coefficient(2.0, 0.3, 0.7),
                   2.0 * particle_absorption_coefficient(1.0, 0.3, 0.7));
}

TEST(Particles, SizeParameter) {
  EXPECT_NEAR(size_parameter(1.0 / (2.0 * kPi), 1.0), 1.0, 1e-15);
  EXPECT_NEAR(size_parameter(3.5e-6, 425e-9), 51.7438790003025, 1e-12);
  EXPECT_NEAR(size_parameter(3.5e-6, 157e-6), 0.140071010032666, 1e-14);
}

TEST(Scattering, SmallParticleEfficiency) {
  EXPECT_DOUBLE_EQ(scattering_efficiency_small(0.7, {1.0, 0.0}), 0.0);
  const double q1 = scattering_efficiency_small(0.2, {1.3, 0.0});
  EXPECT_NEAR(scattering_efficiency_small(0.4, {1.3, 0.0}) / q1, 16.0, 1e-12);
  EXPECT_NEAR(scattering_efficiency_small(0.5, {1.5, 0.0}), 0.0144175317185698, 1e-15);
}

TEST(Scattering, PhaseShiftParameter) {
  EXPECT_DOUBLE_EQ(phase_shift_parameter(1.0, 3.0), 0.0);
  EXPECT_DOUBLE_EQ(phase_shift_parameter(1.5, 1.0), 1.0);
  EXPECT_NEAR(phase_shift_parameter(1.05, 51.7), 5.17, 1e-12);
}

TEST(Scattering, ExtinctionEfficiency) {
  EXPECT_DOUBLE_EQ(extinction_efficiency(0.0), 0.0);
  EXPECT_NEAR(extinction_efficiency(2.0 * kPi), 2.0, 1e-14);
  EXPECT_NEAR(extinction_efficiency(4.08557388547682), 3.17313656667867, 1e-13);
  // Taylor branch joins the closed form smoothly
  EXPECT_NEAR(extinction_efficiency(0.999e-3), extinction_efficiency(1.001e-3), 1e-8);
  EXPECT_NEAR(extinction_efficiency(1e-4), 5e-9, 1e-15);
  EXPECT_THROW(extinction_efficiency(-1.0), DomainError);
}

TEST(Scattering, LargeParticleEfficiency) {
  EXPECT_DOUBLE_EQ(scattering_efficiency_large(2.3, 0.0).efficiency, 2.3);
  EXPECT_DOUBLE_EQ(scattering_efficiency_large(2.0, 0.5).efficiency, 1.5);
  const auto clamped = scattering_efficiency_large(1.0, 1.0 + 1e-12);
  EXPECT_TRUE(clamped.clamped);
  EXPECT_DOUBLE_EQ(clamped.efficiency, 0.0);
  EXPECT_THROW(scattering_efficiency_large(1.0, 1.5), DomainError);
}

TEST(Scattering, LargeParticleMeanApproachesTwo) {
  double sum = 0.0;
  int n = 0;
  for (double p = 50.0; p <= 200.0; p += 0.01, ++n) {
    sum += scattering_efficiency_large(extinction_efficiency(p), 0.0).efficiency;
  }
  EXPECT_NEAR(sum / n, 2.0, 0.1);
}

TEST(Scattering, LossDbLinearityAndLimits) {
  const Material host = table_blood();
  EXPECT_DOUBLE_EQ(scattering_loss_db({host, {}}, 1e-6, 1e-3), 0.0);
  const PropagationMedium one{host, {population(2e-6, 0.2, 1.1, SizeClass::large)}};
  EXPECT_DOUBLE_EQ(scattering_loss_db(one, 1e-6, 0.0), 0.0);
  const PropagationMedium two{host, {population(2e-6, 0.1, 1.1, SizeClass::large),
                                     population(2e-6, 0.1, 1.1, SizeClass::large)}};
  EXPECT_NEAR(scattering_loss_db(two, 1e-6, 1e-3), scattering_loss_db(one, 1e-6, 1e-3), 1e-10);
}

TEST(Scattering, AutomaticRouting) {
  const auto small = population(1e-6, 0.1, 1.2, SizeClass::small);
  const auto large = population(1e-6, 0.1, 1.2, SizeClass::large);
  const auto autom = population(1e-6, 0.1, 1.2, SizeClass::automatic);
  EXPECT_DOUBLE_EQ(scattering_coefficient(autom, 1e-4), scattering_coefficient(small, 1e-4));
  EXPECT_DOUBLE_EQ(scattering_coefficient(autom, 1e-7), scattering_coefficient(large, 1e-7));
}

TEST(ScatteredIntensity, Cases) {
  EXPECT_DOUBLE_EQ(scattered_intensity(3.0, 2.0, 1.0, 0.0), 0.0);
  EXPECT_DOUBLE_EQ(scattered_intensity(3.0, 1.0, 1.0, 1.0), 3.0);
  EXPECT_DOUBLE_EQ(scattered_intensity(3.0, 2.0, 2.0, 1.0) * 4.0,
                   scattered_intensity(3.0, 2.0, 1.0, 1.0));
}

TEST(FarField, Cases) {
  EXPECT_EQ(far_field_check(1e-6, 600e-9), FieldRegime::far);
  EXPECT_EQ(far_field_check(150e-6, 300e-6), FieldRegime::near);
  const double lambda = 300e-6;
  EXPECT_EQ(far_field_check(10.0 * lambda / (2.0 * kPi), lambda), FieldRegime::far);
}

TEST(Validate, RejectsBadPopulations) {
  const Material host = table_blood();
  EXPECT_THROW(validate({host, {population(0.0, 0.1, 1.1, SizeClass::large)}}), DomainError);
  EXPECT_THROW(validate({host, {population(1e-6, 1.5, 1.1, SizeClass::large)}}), DomainError);
  EXPECT_THROW(validate({host, {population(1e-6, 0.6, 1.1, SizeClass::large),
                                population(1e-6, 0.6, 1.1, SizeClass::large)}}),
               DomainError);
}

TEST(TotalPathLoss, BloodAtOneTerahertzOracle) {
  // The composed value from the Debye table; the 65.8 dB headline figure is
  // compared in the acceptance suite.
  const auto b = total_path_loss({table_blood(), {}}, 1e12, 1e-3);
  EXPECT_NEAR(b.wavelength_in_medium, kBloodLambdaG, 1e-16);
  EXPECT_NEAR(b.absorption_db, 10.0 * kBloodMuAbs * 1e-3 * std::log10(std::exp(1.0)), 1e-9);
  EXPECT_NEAR(b.spread_db, -20.0 * std::log10(kBloodLambdaG / (4.0 * kPi * 1e-3)), 1e-9);
  EXPECT_DOUBLE_EQ(b.scattering_db, 0.0);
  EXPECT_EQ(b.total_db, b.spread_db + b.absorption_db + b.scattering_db);
  EXPECT_NEAR(b.total_db, 140.88, 0.01);
  EXPECT_NEAR(b.l_abs, std::pow(10.0, -b.absorption_db / 10.0), 1e-30);
  EXPECT_EQ(b.regime, FieldRegime::far);
}

TEST(TotalPathLoss, ScatteringNegligibleAtTerahertz) {
  const auto pops = load_populations(kData / "populations" / "blood_cells.csv");
  const auto b = total_path_loss({table_blood(), pops}, 1e12, 1e-3);
  EXPECT_GT(b.scattering_db, 0.0);
  EXPECT_LT(b.scattering_db, 0.01 * b.absorption_db);
}

TEST(TotalPathLoss, OpticalHemoglobinWithBloodCells) {
  const auto pops = load_populations(kData / "populations" / "blood_cells.csv");
  const auto& hb = MaterialLibrary::builtin("optical").at("hemoglobin");
  const auto b = total_path_loss({hb, pops}, kSpeedOfLight / 600e-9, 10e-6);
  EXPECT_NEAR(b.spread_db, 49.41, 0.01);
  EXPECT_NEAR(b.absorption_db, 0.0806, 1e-3);
  EXPECT_GT(b.scattering_db, b.absorption_db);  // scattering dominates in the optical band
  EXPECT_EQ(b.total_db, b.spread_db + b.absorption_db + b.scattering_db);
}

TEST(TotalPathLoss, MonotoneInDistance) {
  double prev = -1e300;
  for (double d = 1e-5; d <= 1e-2; d *= 1.2) {
    const double t = total_path_loss({table_blood(), {}}, 1e12, d).total_db;
    EXPECT_GT(t, prev);
    prev = t;
  }
}

TEST(TotalPathLoss, Errors) {
  EXPECT_THROW(total_path_loss({table_blood(), {}}, 1e12, 0.0), DomainError);
  EXPECT_THROW(total_path_loss({table_blood(), {}}, 0.0, 1e-3), DomainError);
  const auto& hb = MaterialLibrary::builtin("optical").at("hemoglobin");
  EXPECT_THROW(total_path_loss({hb, {}}, 1e12, 1e-3), RangeError);
}
