#pragma once

#include "rsbandit/bandit/policy.hpp"
#include "rsbandit/linear/episodic_memory.hpp"
#include "rsbandit/linear/linear_stats.hpp"

#include <cstddef>
#include <cstdint>

namespace rsb {

std::size_t lingreedy_select(const FeatureVector& x, const LinearStats& stats);

/// argmax_i theta_i^T x + alpha * sqrt(x^T A_i^{-1} x).
std::size_t linucb_select(const FeatureVector& x, const LinearStats& stats, double alpha);

struct LinTsParams {
    double lambda = 0.25;  // prior precision, used as the ridge of LinearStats
    double alpha = 6.0;    // inverse-gamma shape prior
    double beta = 6.0;     // inverse-gamma scale prior
    // Multiplies the sampled standard deviation; 0 turns sampling off.
    double variance_scale = 1.0;
};

/// Normal-inverse-gamma posterior sampling: sigma^2 ~ IG(a_n, b_n), then
/// theta_i ~ N(theta_hat_i, sigma^2 A_i^{-1}); argmax of the sampled scores.
std::size_t lints_select(const FeatureVector& x, const LinearStats& stats, const LinTsParams& params, Rng& rng);

/// argmax_i phi_i * (theta_i^T x - aleph).
std::size_t reglinrs_select(const FeatureVector& x, const LinearStats& stats, const Vector& phi, double aleph);

/// Shared update schedule: statistics are accumulated every step while the
/// closed-form solve runs every `refresh_interval` updates and at warmup end.
class LinearPolicyBase : public Policy {
public:
    LinearPolicyBase(std::size_t num_actions, std::size_t dim, double ridge, std::size_t refresh_interval);

    void update(const FeatureVector& x, std::size_t action, double reward) override;
    void end_warmup() override { stats_.refresh(); }
    std::size_t num_actions() const override { return stats_.num_actions(); }

    const LinearStats& stats() const noexcept { return stats_; }

protected:
    LinearStats stats_;

private:
    std::size_t refresh_interval_;
    std::size_t pending_ = 0;
};

class LinGreedyPolicy final : public LinearPolicyBase {
public:
    LinGreedyPolicy(std::size_t num_actions, std::size_t dim, std::size_t refresh_interval = 20);
    std::size_t select(const FeatureVector& x) override { return lingreedy_select(x, stats_); }
    std::string name() const override { return "lingreedy"; }
};

class LinUcbPolicy final : public LinearPolicyBase {
public:
    LinUcbPolicy(std::size_t num_actions, std::size_t dim, double alpha, std::size_t refresh_interval = 20);
    std::size_t select(const FeatureVector& x) override { return linucb_select(x, stats_, alpha_); }
    std::string name() const override { return "linucb"; }

private:
    double alpha_;
};

class LinTsPolicy final : public LinearPolicyBase {
public:
    LinTsPolicy(std::size_t num_actions, std::size_t dim, const LinTsParams& params, std::uint64_t seed,
                std::size_t refresh_interval = 20);
    std::size_t select(const FeatureVector& x) override { return lints_select(x, stats_, params_, rng_); }
    std::string name() const override { return "lints"; }

private:
    LinTsParams params_;
    Rng rng_;
};

struct RegLinRsParams {
    double aleph = 0.65;
    std::size_t memory_capacity = 10000;
    std::size_t k = 50;
    double eps = 1e-4;
};

/// RS with linear reward estimates and kNN-approximated trial ratios.
/// Uses min(k, memory size) neighbours while the memory is still filling.
class RegLinRsPolicy final : public LinearPolicyBase {
public:
    RegLinRsPolicy(std::size_t num_actions, std::size_t dim, const RegLinRsParams& params,
                   std::size_t refresh_interval = 20);

    std::size_t select(const FeatureVector& x) override;
    void update(const FeatureVector& x, std::size_t action, double reward) override;
    std::string name() const override { return "reglinrs"; }

    Vector reliability(const FeatureVector& x) const;
    const EpisodicMemory& memory() const noexcept { return memory_; }

private:
    RegLinRsParams params_;
    EpisodicMemory memory_;
};

}  // namespace rsb
