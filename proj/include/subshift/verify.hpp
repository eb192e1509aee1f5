#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "subshift/shift_models.hpp"

namespace subshift {

enum class CheckStatus { pass, fail, skipped };

const char* to_string(CheckStatus status);

/// One line of a suite: `label` names the result being instantiated.
struct Check {
  std::string label;
  CheckStatus status;
  std::string detail;
};

struct SuiteParams {
  std::size_t max_n = 32;
  std::size_t range = 2;
  std::size_t inv_range = 2;
  std::size_t horizon = 12;
  std::uint64_t budget = 10'000'000;
  unsigned threads = 0;
};

struct SuiteResult {
  std::string suite;
  std::vector<Check> checks;

  bool passed() const;
  nlohmann::ordered_json to_json() const;
};

const std::vector<std::string>& suite_names();

/// Runs a named suite. Every suite except "examples-6" needs a spec.
SuiteResult run_suite(const std::string& name, const std::optional<ShiftSpec>& spec, const SuiteParams& params);

}  // namespace subshift
