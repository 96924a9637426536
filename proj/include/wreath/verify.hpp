#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wreath/base_ring.hpp"

namespace wreath {

enum class CheckStatus { Pass, Fail, Skip };

struct CheckResult {
  std::string name;    // suite/check
  std::string anchor;  // the identity being checked
  CheckStatus status = CheckStatus::Pass;
  std::string detail;  // counterexample, or why the check was skipped
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;  // sorted by name
  bool passed() const;
};

const std::vector<std::string>& suite_names();  // without "all"

// Runs one suite at degree D; "all" runs every suite, reporting a suite whose
// optional ring data is missing as skipped. A named suite with missing data
// throws MissingDataError.
SuiteReport run_suite(const std::string& suite, const BaseRing& ring, int degree, std::uint64_t seed);

std::string render_text(const SuiteReport& report, const std::string& ring_name, int degree, std::uint64_t seed);
std::string render_json(const SuiteReport& report, const std::string& ring_name, int degree, std::uint64_t seed);

}  // namespace wreath
