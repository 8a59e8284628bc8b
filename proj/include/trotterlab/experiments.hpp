#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "trotterlab/report.hpp"

namespace trotterlab {

inline constexpr std::uint64_t kDefaultSeed = 987654321ULL;

// Registered experiment names, in the order --list-experiments prints them:
//   section1_battery   semigroup/resolvent inequality sweep over random pairs
//   trotter_rates      product-formula error curves vs the proved envelope
//   envelope_audit     tau-scale defect and power-growth bounds, plus envelope
//   evolution_rates    Riemann-gap rates for the scalar evolution model
//   cantor_demo        nonconvergence witness on the fat-Cantor indicator
//   slow_witness_demo  prescribed lower bounds along a dyadic subsequence
//   bridge_check       grid realization vs scalar propagators, same tau grid
std::vector<std::string> experiment_names();

// Parses the JSON config text, applies defaults, rejects unknown keys
// (UsageError names the offending key), runs the experiment, and returns the
// report with the fully resolved config echoed back. seed_override, when
// set, replaces the config seed before resolution.
RunReport run_experiment_text(const std::string& config_text,
                              std::optional<std::uint64_t> seed_override = {});

RunReport run_experiment_file(const std::string& config_path,
                              std::optional<std::uint64_t> seed_override = {});

}  // namespace trotterlab
