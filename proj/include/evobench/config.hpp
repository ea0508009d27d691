#pragma once

#include <filesystem>
#include <string>

#include "evobench/harness.hpp"

namespace evobench {

/// Parses an experiment configuration from JSON text. The schema is strict:
/// unknown keys anywhere raise ConfigurationError, as do keys that do not
/// apply to an algorithm's type.
ExperimentConfig parse_experiment_config(const std::string& json_text);

ExperimentConfig load_experiment_config(const std::filesystem::path& path);

/// Config serialized back to canonical JSON (echoed into run manifests).
std::string experiment_config_to_json(const ExperimentConfig& config,
                                      int indent = 2);

/// Reads the Weierstrass instances back out of a run manifest, so a recorded
/// experiment can be replayed against the identical shifted/rotated problem.
std::vector<std::pair<std::size_t, BenchmarkSpec>> read_manifest_instances(
    std::istream& in);

}  // namespace evobench
