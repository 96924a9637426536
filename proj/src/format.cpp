#include "wreath/format.hpp"

namespace wreath {

std::string format_linear_combination(const std::vector<std::pair<Rational, std::string>>& terms) {
  std::string out;
  for (const auto& [c, name] : terms) {
    if (c == 0) continue;
    Rational mag = abs(c);
    if (out.empty()) out += c < 0 ? "-" : "";
    else out += c < 0 ? " - " : " + ";
    if (name.empty()) out += to_string(mag);
    else if (mag == 1) out += name;
    else out += to_string(mag) + " * " + name;
  }
  return out.empty() ? "0" : out;
}

}  // namespace wreath
