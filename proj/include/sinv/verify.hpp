#pragma once

#include <cstdint>
#include <string>
#include <vector>

// Randomized verification suites, one per acceptance criterion.  Each suite
// draws its data from the seed, runs the pinned number of checks, and
// reports the first failure verbatim; all comparisons are exact.

namespace sinv {

struct SuiteOptions {
  std::string field = "rational";  // "rational" or "fp:<odd prime>"
  std::uint64_t seed = 12345;
  unsigned window_cap = 48;
};

struct SuiteOutcome {
  std::string name;
  bool pass = false;
  std::string detail;  // counts on success, first failure otherwise
};

std::vector<std::string> suite_names();

// Throws std::invalid_argument for an unknown suite name; domain errors
// escaping a suite are caught and reported as failures.
SuiteOutcome run_suite(const std::string& name, const SuiteOptions& opt);

}  // namespace sinv
