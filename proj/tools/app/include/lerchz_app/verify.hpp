#pragma once

// Verification suites behind `lerchz verify <id>`, plus the
// count-nonvanishing and coeffs commands. Identity suites compare two
// independent evaluations within their error bounds; asymptotic suites fit an
// envelope constant to the residual against a predicted main term.

#include <cstdint>
#include <string>
#include <vector>

#include "lerchz_app/report.hpp"
#include "lerchz_app/run_config.hpp"

namespace lerchz::app {

struct SuiteResult {
  MomentReport report;
  std::int64_t identity_checks = 0;
  std::int64_t identity_failures = 0;
  std::int64_t envelope_points = 0;
  std::int64_t envelope_failures = 0;
};

const std::vector<std::string>& verify_ids();
bool is_identity_suite(const std::string& id);

// Runs under the precision in config; throws ParseError for unknown ids.
SuiteResult run_verify(const RunConfig& config);
SuiteResult run_count_nonvanishing(const RunConfig& config);
SuiteResult run_coeffs(const RunConfig& config);

}  // namespace lerchz::app
