#include <gtest/gtest.h>

#include <cmath>

#include "appendix_oracle.hpp"
#include "thzchan/constants.hpp"
#include "thzchan/error.hpp"
#include "thzchan/interface_reflection.hpp"

using namespace thz;

namespace {

using cplx = std::complex<double>;
constexpr double kAir = fixed_index::kAir;
constexpr double kFat = fixed_index::kFat;
constexpr double kSkin = fixed_index::kSkin;
constexpr double kBlood = fixed_index::kBlood;

InterfaceSpec pair(double n1, double n2) { return {cplx(n1, 0.0), cplx(n2, 0.0)}; }

// The six ordered pairs plotted by the reference script.
const std::vector<std::pair<double, double>> kAppendixPairs = {
    {kSkin, kAir}, {kFat, kSkin}, {kBlood, kFat},
    {kAir, kSkin}, {kSkin, kFat}, {kFat, kBlood}};

}  // namespace

TEST(DecayingSqrt, Branch) {
  EXPECT_EQ(decaying_sqrt(cplx(4.0, 0.0)), cplx(2.0, 0.0));
  const auto s = decaying_sqrt(cplx(-4.0, 0.0));
  EXPECT_NEAR(s.real(), 0.0, 1e-15);
  EXPECT_NEAR(s.imag(), -2.0, 1e-15);
  const auto t = decaying_sqrt(cplx(3.0, -1.0));
  EXPECT_LE(t.imag(), 0.0);
  EXPECT_NEAR(std::abs(t * t - cplx(3.0, -1.0)), 0.0, 1e-14);
}

TEST(Fresnel, NoContrast) {
  for (double t = 0.0; t < 1.5; t += 0.1) {
    EXPECT_NEAR(std::abs(fresnel_reflection(pair(1.3, 1.3), t, Polarization::te).amplitude), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(fresnel_reflection(pair(1.3, 1.3), t, Polarization::tm).amplitude), 0.0, 1e-15);
  }
}

TEST(Fresnel, SkinToAirNormalIncidence) {
  const auto te = fresnel_reflection(pair(kSkin, kAir), 0.0, Polarization::te);
  const auto tm = fresnel_reflection(pair(kSkin, kAir), 0.0, Polarization::tm);
  const double expected = std::abs((1.0 / 1.73 - 1.0) / (1.0 / 1.73 + 1.0));
  EXPECT_NEAR(std::abs(te.amplitude), expected, 1e-15);
  EXPECT_NEAR(std::abs(tm.amplitude), expected, 1e-15);
  EXPECT_NEAR(std::abs(te.amplitude), 0.267399267399267, 1e-15);
  EXPECT_NEAR(te.power, expected * expected, 1e-15);
}

TEST(Fresnel, TotalInternalReflectionBeyondCritical) {
  const double t = deg_to_rad(80.0);
  EXPECT_NEAR(std::abs(fresnel_reflection(pair(kBlood, kFat), t, Polarization::te).amplitude), 1.0, 1e-14);
  EXPECT_NEAR(std::abs(fresnel_reflection(pair(kBlood, kFat), t, Polarization::tm).amplitude), 1.0, 1e-14);
}

TEST(Fresnel, DomainErrors) {
  EXPECT_THROW(fresnel_reflection(pair(1.0, 1.73), kPi / 2.0, Polarization::te), DomainError);
  EXPECT_THROW(fresnel_reflection(pair(1.0, 1.73), -0.1, Polarization::te), DomainError);
  EXPECT_THROW(fresnel_reflection(pair(0.0, 1.73), 0.1, Polarization::te), DomainError);
}

TEST(Fresnel, MagnitudeBoundedForLossyTransmissionMedium) {
  const InterfaceSpec lossy{cplx(1.9, 0.0), cplx(1.3, -0.2)};
  for (double t = 0.0; t < kPi / 2.0; t += 0.01) {
    for (auto pol : {Polarization::te, Polarization::tm}) {
      EXPECT_LE(std::abs(fresnel_reflection(lossy, t, pol).amplitude), 1.0 + 1e-12);
    }
  }
}

TEST(Fresnel, LossyIncidenceAgreesWithTransverseForm) {
  const InterfaceSpec lossy{cplx(1.9, -0.56), cplx(1.3, -0.01)};
  for (double t = 0.0; t < 1.5; t += 0.05) {
    const auto r = fresnel_reflection(lossy, t, Polarization::te).amplitude;
    const auto kx = lossy.n1 * std::sin(t);
    const auto a = decaying_sqrt(lossy.n1 * lossy.n1 - kx * kx);
    const auto b = decaying_sqrt(lossy.n2 * lossy.n2 - kx * kx);
    EXPECT_NEAR(std::abs(r - (a - b) / (a + b)), 0.0, 1e-14);
  }
}

TEST(Brewster, LosslessPairs) {
  const auto same = brewster_angle(pair(1.4, 1.4));
  EXPECT_NEAR(rad_to_deg(same.angle), 45.0, 1e-12);
  const auto as = brewster_angle(pair(kAir, kSkin));
  EXPECT_TRUE(as.exact);
  EXPECT_NEAR(rad_to_deg(as.angle), 59.9705982384853, 1e-10);
  EXPECT_LT(as.residual, 1e-8);
  EXPECT_NEAR(rad_to_deg(brewster_angle(pair(kFat, kSkin)).angle), 47.5947102387949, 1e-10);
}

TEST(Brewster, LossyMinimum) {
  const InterfaceSpec lossy{cplx(1.0, 0.0), cplx(1.9, -0.2)};
  const auto b = brewster_angle(lossy);
  EXPECT_FALSE(b.exact);
  for (double d : {-1e-3, 1e-3}) {
    EXPECT_LE(b.residual,
              std::abs(fresnel_reflection(lossy, b.angle + d, Polarization::tm).amplitude));
  }
}

TEST(Critical, Pairs) {
  EXPECT_FALSE(critical_angle(pair(kAir, kSkin)).has_value());
  EXPECT_FALSE(critical_angle(pair(kFat, kSkin)).has_value());
  EXPECT_NEAR(rad_to_deg(*critical_angle(pair(kBlood, kFat))), 53.3244364978193, 1e-10);
  EXPECT_NEAR(rad_to_deg(*critical_angle(pair(kSkin, kAir))), 35.3124310389040, 1e-10);
  for (const auto& [n1, n2] : kAppendixPairs) {
    EXPECT_EQ(critical_angle(pair(n1, n2)).has_value(), n1 > n2);
  }
  EXPECT_THROW(critical_angle({cplx(1.9, -0.1), cplx(1.0, 0.0)}), DomainError);
}

TEST(Sweep, SinglePointMatchesDirectCall) {
  const auto rows = reflectance_sweep(pair(kSkin, kAir), {0.0}, Polarization::te);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].magnitude,
            std::abs(fresnel_reflection(pair(kSkin, kAir), 0.0, Polarization::te).amplitude));
}

TEST(Sweep, SkinToAirTeMonotoneToUnity) {
  const auto rows = reflectance_sweep(pair(kSkin, kAir), appendix_angle_grid(), Polarization::te);
  ASSERT_EQ(rows.size(), 91u);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    EXPECT_GE(rows[i].magnitude, rows[i - 1].magnitude - 1e-15);
  }
  EXPECT_NEAR(rows[36].magnitude, 1.0, 1e-14);  // first degree past 35.3
  EXPECT_LT(rows[35].magnitude, 1.0);
}

TEST(Sweep, AirToSkinTmHasUniqueZeroNearSixty) {
  std::vector<double> grid;
  for (double d = 0.0; d < 89.95; d += 0.05) grid.push_back(deg_to_rad(d));
  const auto rows = reflectance_sweep(pair(kAir, kSkin), grid, Polarization::tm);
  std::size_t best = 0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].magnitude < rows[best].magnitude) best = i;
  }
  EXPECT_NEAR(rad_to_deg(rows[best].theta), 59.97, 0.05);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (i <= best) EXPECT_LT(rows[i].magnitude, rows[i - 1].magnitude);
    else EXPECT_GT(rows[i].magnitude, rows[i - 1].magnitude);
  }
}

TEST(Sweep, UnsortedGridRejected) {
  EXPECT_THROW(reflectance_sweep(pair(1.0, 1.5), {0.2, 0.1}, Polarization::te), DomainError);
}

TEST(Sweep, GridShapes) {
  EXPECT_EQ(default_angle_grid().size(), 90u);
  EXPECT_EQ(appendix_angle_grid().size(), 91u);
  EXPECT_DOUBLE_EQ(appendix_angle_grid().back(), kPi / 2.0);
}

TEST(AppendixOracle, SixInterfacePairsIntegerDegrees) {
  for (const auto& [n1, n2] : kAppendixPairs) {
    const auto ref = oracle::func_rte_rtm(n1, n2, 90);
    const auto te = reflectance_sweep(pair(n1, n2), appendix_angle_grid(), Polarization::te);
    const auto tm = reflectance_sweep(pair(n1, n2), appendix_angle_grid(), Polarization::tm);
    for (int deg = 0; deg <= 90; ++deg) {
      EXPECT_NEAR(te[deg].magnitude, ref.rte[deg], 1e-12) << n1 << "->" << n2 << " " << deg;
      EXPECT_NEAR(tm[deg].magnitude, ref.rtm[deg], 1e-12) << n1 << "->" << n2 << " " << deg;
    }
  }
}
