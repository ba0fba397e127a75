#include "thzchan/link_budget.hpp"

#include <charconv>
#include <cmath>
#include <fmt/format.h>

#include "thzchan/error.hpp"

namespace thz {

double received_power(const RadioLink& link) {
  return link.p_t + link.g_t - link.loss_db + link.g_r;
}

double required_sensitivity(double p_r_dbw, double snr_target_db) {
  return p_r_dbw - snr_target_db;
}

double dbw_to_watts(double dbw) { return std::pow(10.0, dbw / 10.0); }

double watts_to_dbw(double watts) {
  if (!(watts > 0.0)) {
    throw DomainError(fmt::format("power must be positive (got {} W)", watts));
  }
  return 10.0 * std::log10(watts);
}

std::optional<double> pathloss_from_s21(double s21_mag) {
  if (s21_mag < 0.0 || s21_mag > 1.0) {
    throw DomainError(
        fmt::format("|S21| must be in [0, 1] (got {})", s21_mag));
  }
  if (s21_mag == 0.0) return std::nullopt;
  return -20.0 * std::log10(s21_mag);
}

double pathloss_from_fields(double e_sq_source, double e_sq_point) {
  if (!(e_sq_source > 0.0) || !(e_sq_point > 0.0)) {
    throw DomainError("field intensities must be positive");
  }
  return 10.0 * std::log10(e_sq_source / e_sq_point);
}

BudgetReport evaluate_budget(const RadioLink& link, double snr_target_db) {
  if (!std::isfinite(link.loss_db)) throw DomainError("loss must be finite");
  BudgetReport r;
  r.link = link;
  r.snr_target_db = snr_target_db;
  r.p_r_dbw = received_power(link);
  r.p_r_watts = dbw_to_watts(r.p_r_dbw);
  r.required_sensitivity_dbw = required_sensitivity(r.p_r_dbw, snr_target_db);
  r.required_sensitivity_watts = dbw_to_watts(r.required_sensitivity_dbw);
  return r;
}

FeasibilityVerdict link_feasibility(const BudgetReport& report,
                                    const DetectorSpec& detector,
                                    double snr_target_db) {
  const double threshold = required_sensitivity(report.p_r_dbw, snr_target_db);
  const double margin = threshold - detector.sensitivity;
  return {margin >= 0.0, margin};
}

const std::vector<DetectorSpec>& builtin_detectors() {
  static const std::vector<DetectorSpec> detectors = {
      {"thz-worked", -105.8},
      {"optical-worked", -108.6},
  };
  return detectors;
}

DetectorSpec resolve_detector(const std::string& name_or_dbw) {
  for (const auto& d : builtin_detectors()) {
    if (d.name == name_or_dbw) return d;
  }
  double v = 0.0;
  const auto* end = name_or_dbw.data() + name_or_dbw.size();
  const auto [ptr, ec] = std::from_chars(name_or_dbw.data(), end, v);
  if (!name_or_dbw.empty() && ec == std::errc{} && ptr == end) {
    return {fmt::format("{} dBW", v), v};
  }
  throw ResolutionError(fmt::format(
      "unknown detector '{}' (known: thz-worked, optical-worked, or a dBW value)",
      name_or_dbw));
}

}  // namespace thz
