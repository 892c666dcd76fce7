#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "utfw/model_params.hpp"

// The `verify` subcommand: every inequality and identity the library
// relies on, checked against random probes and the extremal family, with
// worst-case margins reported.

namespace utfw::cli {

struct SuiteResult {
  std::string name;
  bool pass = false;
  double worst = 0.0;   // suite-specific worst-case margin or error
  std::string detail;   // what "worst" measures
};

std::vector<SuiteResult> run_verify_suites(const ModelParams& p,
                                           std::uint64_t seed);

}  // namespace utfw::cli
