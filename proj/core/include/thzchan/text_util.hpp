#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace thz::text {

std::string_view trim(std::string_view s);

/// Splits on `sep` and trims every field.
std::vector<std::string> split(std::string_view s, char sep);

/// Parses a whole field as a double; throws ConfigError naming `what` otherwise.
double parse_double(std::string_view s, std::string_view what);

/// Strips a trailing `#` comment and surrounding whitespace.
std::string_view strip_comment(std::string_view line);

}  // namespace thz::text
