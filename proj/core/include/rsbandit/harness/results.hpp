#pragma once

#include "rsbandit/env/dataset.hpp"
#include "rsbandit/harness/config.hpp"
#include "rsbandit/harness/simulation.hpp"

#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace rsb {

/// Canonical JSON form of a config (stable key order, shortest round-trip
/// numbers).
std::string config_to_json(const ExperimentConfig& cfg);
/// Inverse of config_to_json. Throws ConfigError on malformed input.
ExperimentConfig config_from_json(const std::string& text);

/// Git blob id (SHA-1 of "blob <len>\0" + content), hex encoded.
std::string git_blob_hash(const std::string& content);

/// Interpretation choices baked into this build, recorded in run metadata.
std::map<std::string, std::string> design_flags(const ExperimentConfig& cfg);

struct WrittenFiles {
    std::vector<std::filesystem::path> per_policy_csv;
    std::filesystem::path long_csv;
    std::filesystem::path metadata;
    std::filesystem::path svg;
};

/// Emits <label>.csv (step, mean_regret, stderr_regret, mean_reward,
/// mean_accuracy), results_long.csv (policy, step, metric, value),
/// metadata.json and regret.svg into `dir`. Throws std::runtime_error naming
/// the path on I/O failure.
WrittenFiles write_results(const std::vector<AggregatedResult>& results, const ExperimentConfig& cfg,
                           const BanditDataset& ds, const std::filesystem::path& dir);

/// Reads back the config stored in a metadata.json.
ExperimentConfig read_metadata_config(const std::filesystem::path& metadata);

/// File-system safe version of a policy label.
std::string sanitize_label(const std::string& label);

}  // namespace rsb
