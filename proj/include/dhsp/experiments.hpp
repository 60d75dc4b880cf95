// Reproducible experiment drivers behind the CLI subcommands. Each command
// returns a machine-readable report {config, results, checks, duration_ms};
// re-running with the same config reproduces the numeric payload bit-for-bit.
#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"

namespace dhsp {

inline constexpr const char* kVersion = "0.1.0";

struct ExperimentConfig {
  static constexpr int kMaxOrder = 4096;

  int n = 8;
  std::optional<int> slope;  // hidden a; derived from the seed when absent
  long long samples = 0;     // Monte Carlo draws or trials (command-specific)
  int m = 0;                 // per-trial sample/pair count; 0 = command default
  std::uint64_t seed = 1;
  std::string format = "json";  // json | csv
  std::string out_path;         // empty = stdout
  int threads = 1;

  void validate() const;  // throws std::invalid_argument
};

struct ExperimentReport {
  nlohmann::json payload;
  std::string csv;
  bool ok = false;  // true iff every check passed
};

ExperimentReport cmd_irreps(const ExperimentConfig& config);
ExperimentReport cmd_qft_check(const ExperimentConfig& config);
ExperimentReport cmd_hsp(const ExperimentConfig& config);
ExperimentReport cmd_eh(const ExperimentConfig& config);
ExperimentReport cmd_clone(const ExperimentConfig& config);

// Dispatch by subcommand name; throws std::invalid_argument on unknown names.
ExperimentReport run_command(const std::string& command, const ExperimentConfig& config);

// Compact JSON with doubles rendered at 17 significant digits (round-trip
// exact) independent of locale; object keys come out in nlohmann's sorted
// order, so equal trees always dump to equal bytes.
std::string dump_json_17(const nlohmann::json& value);

}  // namespace dhsp
