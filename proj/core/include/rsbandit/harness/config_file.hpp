#pragma once

#include "rsbandit/harness/config.hpp"

#include <filesystem>
#include <istream>
#include <string>

namespace rsb {

/// Parses the plain-text suite format used by `bandit compare`:
///
///     # comment
///     env = artificial
///     steps = 10000
///     aleph = 0.65            # any hyperparameter key sets the default
///     artificial.noise_std = 0.01
///
///     [policy.neuralrs-knn]
///     type = neuralrs
///     reliability = knn
///
/// Top-level keys must come before the first section. A section without
/// `type` uses its NAME as the policy kind.
ExperimentConfig parse_compare_config(std::istream& in, const std::string& source = "<config>");
ExperimentConfig load_compare_config(const std::filesystem::path& path);

}  // namespace rsb
