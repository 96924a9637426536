#pragma once

#include <stdexcept>
#include <string>

namespace wreath {

// Precondition on the mathematical input failed (size mismatch, n too small).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Text or config input could not be parsed.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Optional ring data (Adams or lambda tables) was required but is absent.
class MissingDataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A value that must be integral came out fractional. Always a bug.
class IntegralityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace wreath
