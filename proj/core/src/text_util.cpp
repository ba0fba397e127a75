#include "thzchan/text_util.hpp"

#include <charconv>
#include <string>

#include "thzchan/error.hpp"

namespace thz::text {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.emplace_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

double parse_double(std::string_view s, std::string_view what) {
  const auto field = trim(s);
  double value = 0.0;
  const auto* end = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (field.empty() || ec != std::errc{} || ptr != end) {
    throw ConfigError("cannot parse " + std::string(what) + " from '" +
                      std::string(field) + "'");
  }
  return value;
}

std::string_view strip_comment(std::string_view line) {
  const auto hash = line.find('#');
  return trim(line.substr(0, hash));
}

}  // namespace thz::text
