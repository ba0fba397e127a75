#pragma once

#include <string_view>
#include <vector>

namespace thz::cli {

enum class Spacing { linear, log };

Spacing parse_spacing(std::string_view s);

/// A 1-D grid. `points == 1` evaluates at `start` alone and ignores `stop`;
/// otherwise start < stop is required and both ends are included exactly.
struct SweepSpec {
  double start = 0.0;
  double stop = 0.0;
  int points = 1;
  Spacing spacing = Spacing::linear;

  std::vector<double> values() const;
};

}  // namespace thz::cli
