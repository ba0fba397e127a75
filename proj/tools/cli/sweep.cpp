#include "cli/sweep.hpp"

#include <cmath>
#include <fmt/format.h>

#include "thzchan/error.hpp"

namespace thz::cli {

Spacing parse_spacing(std::string_view s) {
  if (s == "lin" || s == "linear") return Spacing::linear;
  if (s == "log") return Spacing::log;
  throw ConfigError(fmt::format("spacing must be lin or log (got '{}')", s));
}

std::vector<double> SweepSpec::values() const {
  if (points < 1) throw ConfigError("sweep needs at least one point");
  if (points == 1) return {start};
  if (!(start < stop)) {
    throw ConfigError(
        fmt::format("sweep needs start < stop (got {} .. {})", start, stop));
  }
  if (spacing == Spacing::log && !(start > 0.0)) {
    throw ConfigError("log spacing needs a positive start");
  }
  std::vector<double> out(static_cast<std::size_t>(points));
  const double last = points - 1;
  for (int i = 0; i < points; ++i) {
    const double t = i / last;
    out[i] = spacing == Spacing::linear
                 ? start + (stop - start) * t
                 : start * std::pow(stop / start, t);
  }
  out.back() = stop;
  return out;
}

}  // namespace thz::cli
