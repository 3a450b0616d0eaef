#pragma once

#include "rsbandit/bandit/policy.hpp"
#include "rsbandit/harness/config.hpp"

#include <cstdint>
#include <functional>
#include <memory>

namespace rsb {

/// Cheating baseline: picks the argmax of the hidden expected rewards.
class OraclePolicy final : public Policy {
public:
    using Peek = std::function<Vector()>;

    OraclePolicy(std::size_t num_actions, Peek peek) : num_actions_(num_actions), peek_(std::move(peek)) {}

    std::size_t select(const FeatureVector&) override { return argmax(peek_()); }
    void update(const FeatureVector&, std::size_t, double) override {}
    bool requires_warmup() const override { return false; }
    std::string name() const override { return "oracle"; }
    std::size_t num_actions() const override { return num_actions_; }

private:
    std::size_t num_actions_;
    Peek peek_;
};

class RandomPolicy final : public Policy {
public:
    RandomPolicy(std::size_t num_actions, std::uint64_t seed) : num_actions_(num_actions), rng_(seed) {}

    std::size_t select(const FeatureVector&) override;
    void update(const FeatureVector&, std::size_t, double) override {}
    bool requires_warmup() const override { return false; }
    std::string name() const override { return "random"; }
    std::size_t num_actions() const override { return num_actions_; }

private:
    std::size_t num_actions_;
    Rng rng_;
};

/// Builds a policy for a problem with the given shape. `peek` is only used by
/// the oracle.
std::unique_ptr<Policy> make_policy(const PolicySpec& spec, std::size_t num_actions, std::size_t dim,
                                    std::uint64_t seed, OraclePolicy::Peek peek = {});

}  // namespace rsb
