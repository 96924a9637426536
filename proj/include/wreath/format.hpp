#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wreath/rational.hpp"

namespace wreath {

// Renders sum c_i * name_i as "a - 2 * b + 1/2 * c"; unit coefficients are
// dropped and the empty sum prints as "0". A name of "" means a bare scalar.
std::string format_linear_combination(const std::vector<std::pair<Rational, std::string>>& terms);

}  // namespace wreath
