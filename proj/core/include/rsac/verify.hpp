#pragma once

// Named exhaustive verification runs, each producing a JSON report.

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace rsac {

struct SuiteResult {
  std::string name;
  bool pass = false;
  nlohmann::json report;
};

/// recurrences, lemma4, theorem12, decomposition, lemma6, remark1, lemma1.
const std::vector<std::string>& suite_names();

/// Default size parameter of each suite (an order bound, or a word length
/// for remark1; lemma4 ignores it).
int default_suite_size(const std::string& name);

/// size < 0 selects the default. Throws std::invalid_argument on an unknown
/// suite and OrderTooLarge on a size outside the suite's range.
SuiteResult run_suite(const std::string& name, int size = -1);

}  // namespace rsac
