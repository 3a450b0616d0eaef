#pragma once

#include "rsbandit/env/artificial.hpp"
#include "rsbandit/reliability/estimators.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rsb {

enum class PolicyKind { neuralrs, reglinrs, rs, lingreedy, linucb, lints, neuralucb, neuralts, oracle, random };
enum class EnvKind { artificial, shuttle };

std::string to_string(PolicyKind kind);
std::string to_string(EnvKind kind);
std::optional<PolicyKind> parse_policy_kind(std::string_view text);
std::optional<EnvKind> parse_env_kind(std::string_view text);

/// Every tunable constant. Defaults are the published experimental settings;
/// the ones the method description leaves open are marked.
struct Hyperparameters {
    double aleph = 0.65;
    std::size_t centroid_multiplier = 2;  // M = K * 2
    double gamma = 0.99;
    double neural_nu = 0.1;
    double neural_lambda = 1e-5;
    std::size_t memory_capacity = 10000;
    std::size_t knn_k = 50;
    double linucb_alpha = 0.1;
    double lints_lambda = 0.25;
    double lints_alpha = 6.0;
    double lints_beta = 6.0;
    std::size_t hidden_width = 128;
    std::size_t depth = 2;
    double learning_rate = 1e-3;
    std::size_t neural_batch = 1024;
    std::size_t linear_batch = 20;
    std::size_t warmup_pulls = 10;
    // unspecified constants
    double knn_eps = 1e-4;
    double kmeans_eps = 1e-8;
    double centroid_init_std = 1.0;

    /// Sets a field from its config-file key. Throws ConfigError on an unknown
    /// key or a malformed value.
    void set(std::string_view key, std::string_view value);
    static const std::vector<std::string>& keys();

    bool operator==(const Hyperparameters&) const = default;
};

struct PolicySpec {
    std::string label;
    PolicyKind kind = PolicyKind::neuralrs;
    ReliabilityKind reliability = ReliabilityKind::knn;
    Hyperparameters hp{};

    bool operator==(const PolicySpec&) const = default;
};

struct ExperimentConfig {
    EnvKind env = EnvKind::artificial;
    std::vector<PolicySpec> policies;
    std::size_t steps = 10000;
    std::size_t runs = 10;
    std::uint64_t seed = 0;
    Hyperparameters defaults{};
    ArtificialConfig artificial{};
    std::string shuttle_path = "data/shuttle.trn";
    std::string output_dir = "results";
    bool count_warmup_regret = true;
    // 0 = one worker per hardware thread; results do not depend on it
    std::size_t threads = 0;

    /// Throws ConfigError when a field is out of range.
    void validate() const;

    bool operator==(const ExperimentConfig&) const = default;
};

/// Label-free policy spec with the given defaults ("neuralrs-kmeans" etc.).
PolicySpec make_policy_spec(PolicyKind kind, ReliabilityKind reliability, const Hyperparameters& hp);

}  // namespace rsb
