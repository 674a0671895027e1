#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "twistzhu/cli/report.hpp"

namespace twistzhu::cli {

struct VerifyOptions {
  std::string suite = "all";
  int max_k = 3;
  int max_weight = 3;
  int order = 8;
  int trials = 100;
  std::uint64_t seed = 0;
  /// Adds 1 to a_J in the tables used by the prop31 and main suites.
  std::optional<int> corrupt_aj;
};

Json config_json(const VerifyOptions& opts);

void run_identities(const VerifyOptions& opts, Report& report);
void run_change_of_variables(const VerifyOptions& opts, Report& report);
void run_conjugation(const VerifyOptions& opts, Report& report);
void run_main(const VerifyOptions& opts, Report& report);

/// Runs the suite named in opts; throws std::invalid_argument for an unknown name.
Report run_verify(const VerifyOptions& opts);

}  // namespace twistzhu::cli
