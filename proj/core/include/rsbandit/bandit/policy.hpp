#pragma once

#include "rsbandit/bandit/types.hpp"

#include <cstddef>
#include <string>

namespace rsb {

/// Interaction contract shared by every agent.
///
/// select() must be deterministic given the policy's state (including its own
/// RNG). update() only ever sees the observed reward.
class Policy {
public:
    virtual ~Policy() = default;

    virtual std::size_t select(const FeatureVector& x) = 0;
    virtual void update(const FeatureVector& x, std::size_t action, double reward) = 0;

    /// Whether the harness should force round-robin pulls before select().
    virtual bool requires_warmup() const { return true; }
    /// Called once after the forced round-robin phase.
    virtual void end_warmup() {}

    virtual std::string name() const = 0;
    virtual std::size_t num_actions() const = 0;
};

}  // namespace rsb
