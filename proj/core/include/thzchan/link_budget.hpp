#pragma once

#include <optional>
#include <string>
#include <vector>

namespace thz {

struct RadioLink {
  double p_t = 0.0;      // dBW
  double g_t = 0.0;      // dB
  double g_r = 0.0;      // dB
  double loss_db = 0.0;  // total channel loss
};

/// Minimum detectable power of a receiver.
struct DetectorSpec {
  std::string name;
  double sensitivity;  // dBW
};

struct BudgetReport {
  RadioLink link;
  double snr_target_db = 0.0;
  double p_r_dbw = 0.0;
  double p_r_watts = 0.0;
  /// Detectable-power threshold N the receiver must reach: p_r - SNR.
  double required_sensitivity_dbw = 0.0;
  double required_sensitivity_watts = 0.0;
};

struct FeasibilityVerdict {
  bool feasible = false;
  double margin_db = 0.0;  // required threshold - detector sensitivity
};

/// P_R = P_T + G_T - Losses + G_R
double received_power(const RadioLink& link);
double required_sensitivity(double p_r_dbw, double snr_target_db);

double dbw_to_watts(double dbw);
/// Throws DomainError for watts <= 0.
double watts_to_dbw(double watts);

/// -20 log10 |S21|. Returns nullopt ("no link") for a zero magnitude.
std::optional<double> pathloss_from_s21(double s21_mag);
/// 10 log10(|E|^2 at source / |E|^2 at the point).
double pathloss_from_fields(double e_sq_source, double e_sq_point);

BudgetReport evaluate_budget(const RadioLink& link, double snr_target_db);

/// Feasible iff the detector reaches the required threshold (inclusive).
FeasibilityVerdict link_feasibility(const BudgetReport& report,
                                    const DetectorSpec& detector,
                                    double snr_target_db);

/// The two worked-example thresholds, shipped as named detectors:
/// "thz-worked" (-105.8 dBW) and "optical-worked" (-108.6 dBW).
const std::vector<DetectorSpec>& builtin_detectors();
/// Resolves a detector name or a plain dBW number; throws ResolutionError.
DetectorSpec resolve_detector(const std::string& name_or_dbw);

inline constexpr double kDefaultThzTransmitPowerDbw = -30.0;      // 1 mW
inline constexpr double kDefaultOpticalTransmitPowerDbw = -10.0;  // 100 mW

}  // namespace thz
