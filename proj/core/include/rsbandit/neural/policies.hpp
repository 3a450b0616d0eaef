#pragma once

#include "rsbandit/bandit/policy.hpp"
#include "rsbandit/linear/episodic_memory.hpp"
#include "rsbandit/neural/replay_buffer.hpp"
#include "rsbandit/numeric/adam.hpp"
#include "rsbandit/numeric/mlp.hpp"
#include "rsbandit/reliability/centroid_bank.hpp"
#include "rsbandit/reliability/estimators.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace rsb {

struct NeuralConfig {
    std::size_t width = 128;
    std::size_t depth = 2;
    AdamConfig adam{};
    std::size_t batch_size = 1024;
    // false freezes the network (no training in update()).
    bool train = true;
};

/// Samples a minibatch from the buffer and applies one Adam step.
double neural_train(MlpParams& params, AdamState& adam, ReplayBuffer& buffer, Rng& rng);

/// argmax_i rho_i * (f_i - aleph).
std::size_t neuralrs_select(const Vector& outputs, const Vector& rho, double aleph);

/// State shared by the network-based policies: weights, optimizer, replay
/// history and the per-step training loop.
class NeuralPolicyBase : public Policy {
public:
    std::size_t num_actions() const override { return params_.num_actions(); }

    const MlpParams& params() const noexcept { return params_; }
    const ReplayBuffer& buffer() const noexcept { return buffer_; }
    const std::vector<double>& losses() const noexcept { return losses_; }

protected:
    NeuralPolicyBase(std::size_t num_actions, std::size_t dim, const NeuralConfig& config, std::uint64_t seed,
                     std::optional<MlpParams> initial);

    /// Appends to the replay buffer and trains once when enabled.
    void record_and_train(const FeatureVector& x, std::size_t action, double reward);

    NeuralConfig config_;
    Rng rng_;
    MlpParams params_;
    AdamState adam_;
    ReplayBuffer buffer_;
    std::vector<double> losses_;
};

struct NeuralRsParams {
    double aleph = 0.65;
    ReliabilityKind reliability = ReliabilityKind::knn;
    std::size_t memory_capacity = 10000;
    std::size_t k = 50;
    double knn_eps = 1e-4;
    // centroids_per_action == 0 means 2 * num_actions
    CentroidBankParams kmeans{0, 0.99, 1.0, 1e-8};
};

/// Satisficing policy with network reward estimates and a pluggable
/// reliability estimate rho.
class NeuralRsPolicy final : public NeuralPolicyBase {
public:
    NeuralRsPolicy(std::size_t num_actions, std::size_t dim, const NeuralRsParams& params,
                   const NeuralConfig& config, std::uint64_t seed, std::optional<MlpParams> initial = std::nullopt);

    std::size_t select(const FeatureVector& x) override;
    void update(const FeatureVector& x, std::size_t action, double reward) override;
    std::string name() const override { return "neuralrs"; }

    /// rho for context x given the network outputs at x.
    Vector reliability(const FeatureVector& x, const MlpOutput& out) const;
    const NeuralRsParams& rs_params() const noexcept { return rs_; }
    const std::vector<std::size_t>& counts() const noexcept { return counts_; }
    const CentroidBank* centroids() const noexcept { return bank_ ? &*bank_ : nullptr; }

private:
    NeuralRsParams rs_;
    std::vector<std::size_t> counts_;
    std::optional<EpisodicMemory> memory_;
    std::optional<CentroidBank> bank_;
};

struct NeuralUcbParams {
    double nu = 0.1;
    double lambda = 1e-5;
};

/// Gradient-based confidence with a diagonal approximation of Z: the bonus for
/// action i is nu * sqrt(sum_j g_ij^2 / Z_j / width); Z accumulates squared
/// gradients of the played action.
class NeuralBonusPolicy : public NeuralPolicyBase {
public:
    void update(const FeatureVector& x, std::size_t action, double reward) override;

    /// Per-action variance term g_i^T Z^{-1} g_i / width at x.
    Vector variance_terms(const FeatureVector& x) const;
    const Vector& diag_confidence() const noexcept { return confidence_; }

protected:
    NeuralBonusPolicy(std::size_t num_actions, std::size_t dim, const NeuralUcbParams& params,
                      const NeuralConfig& config, std::uint64_t seed, std::optional<MlpParams> initial);

    NeuralUcbParams bonus_;
    Vector confidence_;
};

class NeuralUcbPolicy final : public NeuralBonusPolicy {
public:
    NeuralUcbPolicy(std::size_t num_actions, std::size_t dim, const NeuralUcbParams& params,
                    const NeuralConfig& config, std::uint64_t seed, std::optional<MlpParams> initial = std::nullopt);

    std::size_t select(const FeatureVector& x) override;
    std::string name() const override { return "neuralucb"; }

    Vector exploration_bonus(const FeatureVector& x) const;
};

class NeuralTsPolicy final : public NeuralBonusPolicy {
public:
    NeuralTsPolicy(std::size_t num_actions, std::size_t dim, const NeuralUcbParams& params,
                   const NeuralConfig& config, std::uint64_t seed, std::optional<MlpParams> initial = std::nullopt);

    std::size_t select(const FeatureVector& x) override;
    std::string name() const override { return "neuralts"; }
};

}  // namespace rsb
