#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "speclab/config.hpp"

namespace speclab {

struct RunOptions {
  std::string config_path;
  std::string out_override;            // --out; empty keeps the config value
  std::optional<std::uint64_t> seed;   // --seed; overrides [potential] seed
  int threads = 0;                     // --threads; 0 falls back to env/default
};

const std::vector<std::string>& subcommand_names();

/// Dispatches one subcommand.  Returns the process exit status:
/// 0 pass, 1 numerical-acceptance failure, 2 configuration error.
int run_subcommand(const std::string& name, const RunOptions& opts);

/// Builds the potential a config describes (zero field, generator output,
/// or a file load cross-checked against the operator grid).
PotentialField build_potential(const ExperimentConfig& cfg, std::uint64_t seed);

}  // namespace speclab
